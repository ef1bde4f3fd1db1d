#pragma once

#include "gcgeo/cech.hpp"
#include "gcgeo/clifford.hpp"
#include "gcgeo/duality.hpp"
#include "gcgeo/frame.hpp"
#include "gcgeo/metric.hpp"
#include "gcgeo/sekiya.hpp"

#include <json.hpp>

namespace gcgeo {

using Json = nlohmann::json;

// Canonical encodings (External Interfaces):
//   Scalar   "p/q" or "p/q+r/s*i"
//   Poly     [{"c": Scalar, "exp": [e1..en]}, ...]
//   Polyform [{"coeff": Poly, "blade": [ascending indices]}, ...]
//   Vector   [Poly x n]
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json to_json(const Poly& p);
Poly poly_from_json(const Json& j, unsigned nvars);

Json to_json(const Polyform& f);
Polyform polyform_from_json(const Json& j, unsigned dim);

Json to_json(const VectorField& v);
VectorField vector_from_json(const Json& j, unsigned dim);

Json to_json(const FrameAlgebra& f);
FrameAlgebra frame_from_json(const Json& j);

Json to_json(const GenSection& s);
GenSection gen_section_from_json(const Json& j, unsigned dim);

Json to_json(const ContactSection& s);
ContactSection contact_section_from_json(const Json& j, unsigned dim);

Json to_json(const Twists& t);
Twists twists_from_json(const Json& j, unsigned dim);

Json to_json(const MixedPair& mp);
MixedPair mixed_pair_from_json(const Json& j, unsigned dim);

Json to_json(const BbaTransform& t);
BbaTransform bba_from_json(const Json& j, unsigned dim);

Json to_json(const FrameAlgebra& frame, const SekiyaQuadruple& q);
SekiyaQuadruple sekiya_from_json(const Json& j, unsigned dim);

Json to_json(const FrameAlgebra& frame, const GenContactMetric& m);
GenContactMetric metric_from_json(const Json& j, unsigned dim);

Json to_json(const CechDatum& cd);
CechDatum cech_from_json(const Json& j, unsigned dim);

Json to_json(const Report& r);

}  // namespace gcgeo
