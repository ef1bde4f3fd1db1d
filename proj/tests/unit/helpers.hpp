#pragma once

#include "gcgeo/clifford.hpp"
#include "gcgeo/frame.hpp"
#include "gcgeo/rng.hpp"
#include "gcgeo/sections.hpp"

#include <doctest.h>

namespace gct {

using namespace gcgeo;

inline Scalar S(long num, long den = 1) { return Scalar(Rational(num, den)); }
inline Scalar Si(long num, long den = 1) { return Scalar(Rational(0), Rational(num, den)); }

// eps_{i1} ^ ... ^ eps_{ik} with coefficient 1.
inline Polyform eps(unsigned dim, std::vector<unsigned> idx) {
  return Polyform::monomial(dim, idx, Scalar(1));
}

inline VectorField ev(unsigned dim, unsigned k) { return VectorField::basis(dim, k); }

inline Poly x(unsigned dim, unsigned i) { return Poly::variable(dim, i - 1); }

inline Poly c(unsigned dim, long v) { return Poly(dim, Scalar(Rational(v))); }

inline GenSection gsec(VectorField X, Polyform xi) { return {std::move(X), std::move(xi)}; }

inline ContactSection csec(unsigned dim, VectorField X, Poly f, Poly g, Polyform xi) {
  (void)dim;
  return {std::move(X), std::move(f), std::move(g), std::move(xi)};
}

// Random Maurer-Cartan-valid twists: the curvature triple of a random
// potential plus a closed 3-form.
inline Twists random_mc_twists(SplitMix64& rng, const FrameAlgebra& frame);

}  // namespace gct

#include "gcgeo/transforms.hpp"

namespace gct {

inline BbaTransform random_bba(SplitMix64& rng, const FrameAlgebra& frame) {
  return BbaTransform{random_form(rng, frame, 2), random_form(rng, frame, 1),
                      random_form(rng, frame, 1)};
}

inline Twists random_mc_twists(SplitMix64& rng, const FrameAlgebra& frame) {
  BbaTransform t = random_bba(rng, frame);
  Twists tw = curvature_twists(frame, t);
  tw.H3 += frame.d(random_form(rng, frame, 2));
  return tw;
}

inline ContactSection random_contact_section(SplitMix64& rng, const FrameAlgebra& frame) {
  ContactSection s(frame.dim());
  s.X = random_vector(rng, frame);
  s.xi = random_form(rng, frame, 1);
  s.f = random_poly(rng, frame);
  s.g = random_poly(rng, frame);
  return s;
}

}  // namespace gct
