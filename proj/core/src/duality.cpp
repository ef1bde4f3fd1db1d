#include "gcgeo/duality.hpp"

#include "gcgeo/error.hpp"

namespace gcgeo {

Report check_admissible(const FrameAlgebra& frame, const Polyform& H,
                        const std::vector<unsigned>& fiber_indices) {
  Report r;
  if (fiber_indices.size() <= 1) {
    r.pass("admissible", "k <= 1: no fiber pairs, vacuously admissible");
    return r;
  }
  bool ok = true;
  std::string residual, where;
  for (size_t i = 0; i < fiber_indices.size() && ok; ++i)
    for (size_t j = i + 1; j < fiber_indices.size() && ok; ++j) {
      VectorField ei = VectorField::basis(frame.dim(), fiber_indices[i]);
      VectorField ej = VectorField::basis(frame.dim(), fiber_indices[j]);
      Polyform res = contract(ej, contract(ei, H));
      if (!res.is_zero()) {
        ok = false;
        residual = res.str();
        where = "fibers (" + std::to_string(fiber_indices[i]) + "," +
                std::to_string(fiber_indices[j]) + ")";
      }
    }
  r.check("admissible", ok, residual, ok ? "H(X,Y,.) = 0 on all fiber pairs" : where);
  return r;
}

TDualityResult t_dualize_circle(const FrameAlgebra& frame, const MixedPair& mp,
                                const Twists& tw, const Polyform& A, const Polyform& A_tilde,
                                unsigned witness_degree_bound) {
  Report mc = validate_maurer_cartan(frame, tw);
  if (!mc.all_pass()) fail(errc::duality, "t_dualize_circle requires Maurer-Cartan-valid twists");
  Report adm = check_admissible(frame, tw.H3, {});
  if (!adm.all_pass()) fail(errc::duality, "inadmissible H3 for the fiber direction");

  TDualityResult out{MixedPair(frame.dim()), Twists(frame.dim()), A_tilde, A, Report{}};
  out.pair.phi = mp.psi;
  out.pair.psi = mp.phi;
  out.pair.e1 = mp.e2;
  out.pair.e2 = mp.e1;
  out.pair.lambda = -mp.lambda;
  out.pair.mu = mp.mu;
  out.twists = Twists{tw.H3, tw.F, tw.H2};  // interchange F,f <-> H2,g

  out.report.merge(adm, "tduality");
  Report valid = validate_mixed_pair(frame, out.pair);
  out.report.check("tduality.dual_pair_valid", valid.all_pass(),
                   valid.all_pass() ? "" : valid.text());
  Report dual_mc = validate_maurer_cartan(frame, out.twists);
  out.report.check("tduality.dual_twists_mc", dual_mc.all_pass(),
                   dual_mc.all_pass() ? "" : dual_mc.text());

  // Involutivity against the interchanged twists is verified empirically and
  // reported, not asserted.
  try {
    auto witness = solve_involutive(frame, out.pair.pair(), out.twists, witness_degree_bound);
    if (witness)
      out.report.pass("tduality.dual_involutive", "witness found");
    else
      out.report.fail("tduality.dual_involutive", "no witness",
                      "no bounded-degree witness against (H3, F, H2)");
  } catch (const gc_error& e) {
    out.report.skip("tduality.dual_involutive", e.what());
  }
  return out;
}

namespace {

std::optional<Scalar> top_ratio(const FrameAlgebra& frame, const Polyform& m1,
                                const Polyform& m2) {
  unsigned m = frame.dim();
  blade::Mask top = (m == 64) ? ~blade::Mask(0) : ((blade::Mask(1) << m) - 1);
  Poly c1 = m1.coefficient(top);
  Poly c2 = m2.coefficient(top);
  if (c1.is_zero()) fail(errc::degenerate, "first pairing vanishes");
  if (c2.is_zero()) fail(errc::degenerate, "second pairing vanishes");
  if (!c1.is_constant() || !c2.is_constant()) return std::nullopt;
  Scalar ratio = c2.constant_value() / c1.constant_value();
  if (!ratio.is_real()) return std::nullopt;
  return ratio;
}

}  // namespace

std::optional<Scalar> check_einstein_pairing(const FrameAlgebra& frame, const FormPair& p1,
                                             const FormPair& p2) {
  return top_ratio(frame, mukai(p1.first, p1.second), mukai(p2.first, p2.second));
}

std::optional<Scalar> check_einstein_pairing_mixed(const FrameAlgebra& frame, const MixedPair& p1,
                                                   const MixedPair& p2) {
  Polyform m1 = mukai_mixed_self(p1.pair());
  Polyform m2 = mukai_mixed_self(p2.pair());
  if (m1.is_zero()) fail(errc::degenerate, "first self-pairing vanishes");
  if (m2.is_zero()) fail(errc::degenerate, "second self-pairing vanishes");
  blade::Mask top = (blade::Mask(1) << frame.dim()) - 1;
  Poly c1 = m1.coefficient(top);
  Poly c2 = m2.coefficient(top);
  if (!c1.is_constant() || !c2.is_constant() || c1.is_zero()) return std::nullopt;
  Scalar ratio = c2.constant_value() / c1.constant_value();
  if (!ratio.is_real()) return std::nullopt;
  return ratio;
}

ProductLift lift_product(const FrameAlgebra& contact_frame, const MixedPair& mp,
                         const FrameAlgebra& spinor_frame, const Polyform& spinor) {
  Report pre = validate_mixed_pair(contact_frame, mp);
  if (!pre.all_pass())
    fail(errc::input, "lift_product: contact factor does not validate:\n" + pre.text());
  Polyform purity = mukai(spinor.conj(), spinor);
  if (purity.is_zero())
    fail(errc::degenerate, "lift_product: spinor factor has zero Mukai self-pairing");

  FrameAlgebra sum = FrameAlgebra::direct_sum(contact_frame, spinor_frame);
  unsigned n1 = contact_frame.dim();
  unsigned n = sum.dim();

  auto lift_first = [&](const Polyform& w) {
    Polyform out(n);
    for (const auto& [m, c] : w.terms()) out.add_term(m, c.extend_vars(n));
    return out;
  };
  auto lift_second = [&](const Polyform& w) {
    Polyform out(n);
    for (const auto& [m, c] : w.terms()) out.add_term(m << n1, c.shift_vars(n, n1));
    return out;
  };

  ProductLift out{sum, MixedPair(n), Report{}};
  Polyform phi2 = lift_second(spinor);
  out.pair.phi = wedge(lift_first(mp.phi), phi2);
  out.pair.psi = wedge(lift_first(mp.psi), phi2);
  out.pair.lambda = mp.lambda;
  out.pair.mu = mp.mu;
  out.pair.e1 = GenSection(n);
  out.pair.e2 = GenSection(n);
  for (unsigned i = 0; i < n1; ++i) {
    out.pair.e1.X[i] = mp.e1.X[i].extend_vars(n);
    out.pair.e2.X[i] = mp.e2.X[i].extend_vars(n);
  }
  out.pair.e1.xi = lift_first(mp.e1.xi);
  out.pair.e2.xi = lift_first(mp.e2.xi);

  out.report = validate_mixed_pair(sum, out.pair);
  return out;
}

}  // namespace gcgeo
