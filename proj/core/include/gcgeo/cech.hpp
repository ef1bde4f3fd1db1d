#pragma once

#include "gcgeo/transforms.hpp"

#include <map>
#include <string>

namespace gcgeo {

// Patch data on a single shared frame (restriction maps are identities).
struct CechDatum {
  std::vector<std::string> patches;
  std::map<std::string, BbaTransform> data;
};

// Overlap difference (B_ab, b_ab, a_ab) =
//   (B_a - B_b + 1/2 b_a^a_b + 1/2 a_a^b_b, b_a - b_b, a_a - a_b).
BbaTransform cech_overlap(const BbaTransform& ta, const BbaTransform& tb);

// (i) every patch reproduces the expected twists from its curvature triple,
// (ii) overlap cocycle closes on every ordered triple,
// (iii) optionally: the two data differ by a global gauge transformation.
Report validate_cech(const FrameAlgebra& frame, const CechDatum& cd, const Twists& expected,
                     const CechDatum* second = nullptr);

}  // namespace gcgeo
