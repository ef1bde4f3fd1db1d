#include "gcgeo/transforms.hpp"

#include "gcgeo/error.hpp"

namespace gcgeo {

void require_bba(const FrameAlgebra& frame, const BbaTransform& t) {
  frame.require_legal(t.B, "BbaTransform.B");
  frame.require_legal(t.b, "BbaTransform.b");
  frame.require_legal(t.a, "BbaTransform.a");
  auto deg_ok = [](const Polyform& w, unsigned k) { return w.is_zero() || w.is_homogeneous(k); };
  if (!deg_ok(t.B, 2) || !deg_ok(t.b, 1) || !deg_ok(t.a, 1))
    fail(errc::input, "BbaTransform degrees must be (2,1,1)");
}

ContactSection transform_section(const FrameAlgebra& frame, const BbaTransform& t,
                                 const ContactSection& s) {
  require_bba(frame, t);
  Poly iXa = contract(s.X, t.a).coefficient(0);
  Poly iXb = contract(s.X, t.b).coefficient(0);
  ContactSection out(frame.dim());
  out.X = s.X;
  out.f = s.f + iXa;
  out.g = s.g + iXb;
  Scalar half(Rational(1, 2));
  out.xi = s.xi + contract(s.X, t.B) - t.b * s.f - t.a * s.g -
           t.b * (iXa * half) - t.a * (iXb * half);
  return out;
}

BbaTransform compose_transforms(const BbaTransform& t2, const BbaTransform& t1) {
  Scalar half(Rational(1, 2));
  Polyform B = t1.B + t2.B - (wedge(t1.b, t2.a) + wedge(t1.a, t2.b)) * half;
  return {B, t1.b + t2.b, t1.a + t2.a};
}

namespace {

// Exponential of the pair-level algebra action with fiber weights (w_a, w_b):
// delta(phi,psi) = (-B^phi - w_a a^psi, -B^psi + w_b b^phi). The matched
// action has (1,1); the circle-lift action through phi + i*A^psi has (i,-i).
FormPair pair_action(const BbaTransform& t, const FormPair& p, const Scalar& wa,
                     const Scalar& wb) {
  Polyform expB = exp(-t.B);
  Scalar half_ab = wa * wb * Scalar(Rational(1, 2));
  Polyform phi = p.first - wedge(t.a, p.second) * wa -
                 wedge(t.a, wedge(t.b, p.first)) * half_ab;
  Polyform psi = p.second + wedge(t.b, p.first) * wb -
                 wedge(t.b, wedge(t.a, p.second)) * half_ab;
  return {wedge(expB, phi), wedge(expB, psi)};
}

}  // namespace

FormPair transform_mixed_pair(const BbaTransform& t, const FormPair& p) {
  return pair_action(t, p, Scalar(1), Scalar(1));
}

FormPair transform_mixed_pair_lifted(const BbaTransform& t, const FormPair& p) {
  return pair_action(t, p, Scalar::i(), -Scalar::i());
}

namespace {

Twists twist_transform_impl(const FrameAlgebra& frame, const BbaTransform& t, const Twists& tw,
                            bool literal) {
  require_bba(frame, t);
  Scalar half(Rational(1, 2));
  Polyform da = frame.d(t.a);
  Polyform db = frame.d(t.b);
  Polyform quad = (wedge(da, t.b) + wedge(t.a, db)) * half;
  Polyform cross = wedge(t.a, tw.H2) + wedge(t.b, tw.F);
  Polyform H3 = literal ? tw.H3 + frame.d(t.B) + cross + quad
                        : tw.H3 + frame.d(t.B) - cross - quad;
  return {H3, tw.H2 + db, tw.F + da};
}

}  // namespace

Twists transform_twists(const FrameAlgebra& frame, const BbaTransform& t, const Twists& tw,
                        bool check_mc) {
  if (check_mc && !maurer_cartan_ok(frame, tw))
    fail(errc::twist, "transform_twists requires Maurer-Cartan-valid twists");
  return twist_transform_impl(frame, t, tw, /*literal=*/false);
}

Twists transform_twists_literal(const FrameAlgebra& frame, const BbaTransform& t,
                                const Twists& tw) {
  return twist_transform_impl(frame, t, tw, /*literal=*/true);
}

Twists curvature_twists(const FrameAlgebra& frame, const BbaTransform& t) {
  return transform_twists(frame, t, Twists(frame.dim()), /*check_mc=*/false);
}

PolyMatrix section_transform_matrix(const FrameAlgebra& frame, const BbaTransform& t) {
  unsigned n = frame.dim();
  PolyMatrix m(2 * n + 2, n);
  for (unsigned j = 0; j < 2 * n + 2; ++j) {
    std::vector<Scalar> unit(2 * n + 2);
    unit[j] = Scalar(1);
    ContactSection img = transform_section(frame, t, section_from_scalars(n, unit));
    std::vector<Poly> coords = section_coords(img);
    for (unsigned i = 0; i < 2 * n + 2; ++i) m.at(i, j) = coords[i];
  }
  return m;
}

}  // namespace gcgeo
