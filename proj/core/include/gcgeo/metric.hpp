#pragma once

#include "gcgeo/sekiya.hpp"

namespace gcgeo {

// (g, h, transform): C_+- are the e^{(B,b,a)}-images of
//   { (X, f, +-f h^2, +-g(X,.)) }.
struct GenContactMetric {
  PolyMatrix g;       // symmetric n x n
  Poly h;
  BbaTransform transform;
  std::vector<std::vector<Rational>> sample_points;

  explicit GenContactMetric(unsigned dim)
      : g(dim, dim), h(dim, Scalar(1)), transform(dim) {}
};

// Sylvester positivity of g and h != 0 at the declared sample points.
Report validate_metric(const FrameAlgebra& frame, const GenContactMetric& m);

struct MetricSubspaces {
  std::vector<ContactSection> c_plus;
  std::vector<ContactSection> c_minus;
};
MetricSubspaces metric_subspaces(const FrameAlgebra& frame, const GenContactMetric& m);

// G as a (2n+2)-endomorphism; needs g invertible with constant entries and a
// nonzero constant h (exact inverses stay polynomial).
PolyMatrix metric_endomorphism(const FrameAlgebra& frame, const GenContactMetric& m);

// J1 J2 = J2 J1, -J1 J2 = G, span and e-matching conditions.
Report check_cokahler(const FrameAlgebra& frame, const SekiyaQuadruple& q1,
                      const SekiyaQuadruple& q2, const GenContactMetric& m);

}  // namespace gcgeo
