#pragma once

#include "gcgeo/json_io.hpp"

#include <map>
#include <string>

namespace gcgeo {

// One document format for everything: a frame plus named objects, all
// dimension-checked against the frame on load.
struct Document {
  FrameAlgebra frame = FrameAlgebra::coordinate(1);
  std::map<std::string, Polyform> forms;
  std::map<std::string, GenSection> gen_sections;
  std::map<std::string, ContactSection> sections;
  std::map<std::string, Twists> twists;
  std::map<std::string, MixedPair> pairs;
  std::map<std::string, FormPair> form_pairs;
  std::map<std::string, SekiyaQuadruple> quadruples;
  std::map<std::string, GenContactMetric> metrics;
  std::map<std::string, BbaTransform> transforms;
  std::map<std::string, CechDatum> cech;
  std::vector<std::vector<Rational>> sample_points;

  static Document from_json(const Json& j);
  static Document load(const std::string& path);

  const Twists& twists_or_fail(const std::string& name) const;
  const MixedPair& pair_or_fail(const std::string& name) const;
  const BbaTransform& transform_or_fail(const std::string& name) const;
  const SekiyaQuadruple& quadruple_or_fail(const std::string& name) const;
  const GenContactMetric& metric_or_fail(const std::string& name) const;
  const CechDatum& cech_or_fail(const std::string& name) const;
  const FormPair& form_pair_or_fail(const std::string& name) const;
};

}  // namespace gcgeo
