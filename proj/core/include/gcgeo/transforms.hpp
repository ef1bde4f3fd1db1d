#pragma once

#include "gcgeo/clifford.hpp"
#include "gcgeo/linalg.hpp"
#include "gcgeo/sections.hpp"

namespace gcgeo {

// (B, b, a) with homogeneous degrees (2, 1, 1).
struct BbaTransform {
  Polyform B;
  Polyform b;
  Polyform a;

  explicit BbaTransform(unsigned dim) : B(dim), b(dim), a(dim) {}
  BbaTransform(Polyform B2, Polyform b1, Polyform a1)
      : B(std::move(B2)), b(std::move(b1)), a(std::move(a1)) {}

  unsigned dim() const { return B.dim(); }
  BbaTransform inverse() const { return {-B, -b, -a}; }
  friend bool operator==(const BbaTransform& x, const BbaTransform& y) {
    return x.B == y.B && x.b == y.b && x.a == y.a;
  }
};

void require_bba(const FrameAlgebra& frame, const BbaTransform& t);

// e^{(B,b,a)}(X,f,g,xi) =
//   (X, f + i_X a, g + i_X b, xi + i_X B - f b - g a - <X,a> b - <X,b> a).
ContactSection transform_section(const FrameAlgebra& frame, const BbaTransform& t,
                                 const ContactSection& s);

// (B2,b2,a2).(B1,b1,a1) = (B1+B2-1/2(b1^a2+a1^b2), b1+b2, a1+a2); apply t1 first.
BbaTransform compose_transforms(const BbaTransform& t2, const BbaTransform& t1);

// Pair action matched to transform_section (annihilator-equivariant):
//   (e^{-B}(phi - a^psi - 1/2 a^b^phi), e^{-B}(psi + b^phi - 1/2 b^a^psi)).
// The published display carries (b,a) with the opposite sign; it is recovered
// as transform_mixed_pair of (B,-b,-a).
FormPair transform_mixed_pair(const BbaTransform& t, const FormPair& p);

// Circle-lift pair action (phi + i*A^psi transported by the same element):
// preserves the self-pairing exactly and pairs with the real Sekiya
// conjugation; used to deform validated mixed pairs.
FormPair transform_mixed_pair_lifted(const BbaTransform& t, const FormPair& p);

// Twist transform coherent with transform_section, Maurer-Cartan preserving:
//   H3' = H3 + dB - a^H2 - b^F - 1/2(da^b + a^db), H2' = H2 + db, F' = F + da.
// At (H3,H2,F) = 0 this is exactly the curvature triple of the potentials.
// transform_twists_literal keeps the published sign pattern for reports.
Twists transform_twists(const FrameAlgebra& frame, const BbaTransform& t, const Twists& tw,
                        bool check_mc = true);
Twists transform_twists_literal(const FrameAlgebra& frame, const BbaTransform& t,
                                const Twists& tw);

// Curvature triple of a potential: (dB - 1/2 a^db - 1/2 da^b, db, da).
Twists curvature_twists(const FrameAlgebra& frame, const BbaTransform& t);

// e^{(B,b,a)} as a Poly matrix over the ordered frame [X.., f, g, xi..].
PolyMatrix section_transform_matrix(const FrameAlgebra& frame, const BbaTransform& t);

}  // namespace gcgeo
