#include "gcgeo/sections.hpp"

#include "gcgeo/error.hpp"
#include "gcgeo/rng.hpp"

#include <sstream>

namespace gcgeo {

Polyform double_contract(const VectorField& x1, const VectorField& x2, const Polyform& w) {
  return contract(x2, contract(x1, w));
}

Poly pairing_tm(const GenSection& a, const GenSection& b) {
  Poly p = contract(a.X, b.xi).coefficient(0) + contract(b.X, a.xi).coefficient(0);
  return p * Scalar(Rational(1, 2));
}

Poly pairing_contact(const ContactSection& a, const ContactSection& b) {
  Poly p = contract(a.X, b.xi).coefficient(0) + contract(b.X, a.xi).coefficient(0) +
           a.f * b.g + a.g * b.f;
  return p * Scalar(Rational(1, 2));
}

GenSection d_operator_tm(const FrameAlgebra& frame, const Poly& h) {
  return {VectorField(frame.dim()), frame.d(Polyform::scalar(frame.dim(), h))};
}

ContactSection d_operator_contact(const FrameAlgebra& frame, const Poly& h) {
  ContactSection s(frame.dim());
  s.xi = frame.d(Polyform::scalar(frame.dim(), h));
  return s;
}

GenSection dorfman_h(const FrameAlgebra& frame, const GenSection& s1, const GenSection& s2,
                     const Polyform& H, bool check_closed) {
  frame.require_legal(s1.xi, "dorfman_h");
  frame.require_legal(s2.xi, "dorfman_h");
  frame.require_legal(s1.X, "dorfman_h");
  frame.require_legal(s2.X, "dorfman_h");
  if (check_closed && !frame.d(H).is_zero())
    fail(errc::twist, "dorfman_h requires a closed twist form");
  GenSection out(frame.dim());
  out.X = frame.lie_bracket(s1.X, s2.X);
  out.xi = frame.lie_derivative(s1.X, s2.xi) - contract(s2.X, frame.d(s1.xi)) -
           double_contract(s1.X, s2.X, H);
  return out;
}

namespace {

// Shared part of the contact Dorfman product; `oracle_signs` selects the
// S1-reduction signs for the f.H2 / g.F cross terms (true) or the published
// display (false).
ContactSection dorfman_contact_impl(const FrameAlgebra& frame, const ContactSection& s1,
                                    const ContactSection& s2, const Twists& t,
                                    bool oracle_signs) {
  ContactSection out(frame.dim());
  out.X = frame.lie_bracket(s1.X, s2.X);
  out.f = frame.apply_vector(s1.X, s2.f) - frame.apply_vector(s2.X, s1.f) -
          double_contract(s1.X, s2.X, t.F).coefficient(0);
  out.g = frame.apply_vector(s1.X, s2.g) - frame.apply_vector(s2.X, s1.g) -
          double_contract(s1.X, s2.X, t.H2).coefficient(0);

  Polyform xi = frame.lie_derivative(s1.X, s2.xi) - contract(s2.X, frame.d(s1.xi)) -
                double_contract(s1.X, s2.X, t.H3);
  xi += frame.d(Polyform::scalar(frame.dim(), s1.f)) * s2.g;
  xi += frame.d(Polyform::scalar(frame.dim(), s1.g)) * s2.f;
  Polyform cross = contract(s2.X, t.H2) * s1.f - contract(s1.X, t.H2) * s2.f +
                   contract(s2.X, t.F) * s1.g - contract(s1.X, t.F) * s2.g;
  xi += oracle_signs ? -cross : cross;
  out.xi = xi;
  return out;
}

}  // namespace

ContactSection dorfman_contact(const FrameAlgebra& frame, const ContactSection& s1,
                               const ContactSection& s2, const Twists& t, bool check_mc) {
  if (check_mc && !maurer_cartan_ok(frame, t))
    fail(errc::twist, "dorfman_contact requires Maurer-Cartan-valid twists");
  return dorfman_contact_impl(frame, s1, s2, t, /*oracle_signs=*/true);
}

ContactSection dorfman_contact_literal(const FrameAlgebra& frame, const ContactSection& s1,
                                       const ContactSection& s2, const Twists& t) {
  return dorfman_contact_impl(frame, s1, s2, t, /*oracle_signs=*/false);
}

Report validate_maurer_cartan(const FrameAlgebra& frame, const Twists& t) {
  Report r;
  auto degree_ok = [](const Polyform& w, unsigned k) {
    return w.is_zero() || w.is_homogeneous(k);
  };
  r.check("twists.degrees",
          degree_ok(t.H3, 3) && degree_ok(t.H2, 2) && degree_ok(t.F, 2),
          "", "H3, H2, F must be homogeneous of degrees 3, 2, 2");
  Polyform r1 = frame.d(t.H3) + wedge(t.H2, t.F);
  Polyform r2 = frame.d(t.H2);
  Polyform r3 = frame.d(t.F);
  r.check("maurer_cartan.dH3+H2^F", r1.is_zero(), r1.str());
  r.check("maurer_cartan.dH2", r2.is_zero(), r2.str());
  r.check("maurer_cartan.dF", r3.is_zero(), r3.str());
  return r;
}

bool maurer_cartan_ok(const FrameAlgebra& frame, const Twists& t) {
  return validate_maurer_cartan(frame, t).all_pass();
}

std::pair<Polyform, Polyform> split_circle(const Polyform& w, unsigned base_dim) {
  if (w.dim() != base_dim + 1) fail(errc::input, "split_circle dimension mismatch");
  blade::Mask top = blade::Mask(1) << base_dim;
  Polyform w0(base_dim), w1(base_dim);
  for (const auto& [m, c] : w.terms()) {
    // Lifted coefficients never involve the fiber variable; drop it.
    Poly base_c(base_dim);
    for (const auto& [e, v] : c.terms()) {
      if (e[base_dim] != 0) fail(errc::reduction, "form depends on the fiber variable");
      base_c.add_term(std::vector<unsigned>(e.begin(), e.end() - 1), v);
    }
    if (m & top) {
      blade::Mask rest = m & ~top;
      bool flip = blade::degree(rest) % 2 == 1;  // eps_S ^ A = (-1)^{|S|} A ^ eps_S
      w1.add_term(rest, flip ? -base_c : base_c);
    } else {
      w0.add_term(m, base_c);
    }
  }
  return {w0, w1};
}

ContactSection reduce_bracket_oracle(const FrameAlgebra& frame, const Polyform& conn_curvature,
                                     const Polyform& H3, const Polyform& H2,
                                     const ContactSection& s1, const ContactSection& s2) {
  try {
    frame.require_legal(conn_curvature, "reduce_bracket_oracle");
    frame.require_legal(H3, "reduce_bracket_oracle");
    frame.require_legal(H2, "reduce_bracket_oracle");
  } catch (const gc_error& e) {
    fail(errc::reduction, std::string("non-invariant reduction data: ") + e.what());
  }
  FrameAlgebra ext = frame.extend_circle(conn_curvature);
  unsigned n = frame.dim();
  Polyform conn = Polyform::generator(n + 1, n + 1);

  auto lift = [&](const ContactSection& s) {
    GenSection up(n + 1);
    up.X = ext.lift_vector(s.X);
    up.X[n] = ext.lift_poly(s.f);
    up.xi = ext.lift_form(s.xi) + conn * ext.lift_poly(s.g);
    return up;
  };

  Polyform H_up = ext.lift_form(H3) + wedge(conn, ext.lift_form(H2));
  if (!ext.d(H_up).is_zero())
    fail(errc::twist, "extended twist H3 + A^H2 is not closed (Maurer-Cartan fails)");

  GenSection res = dorfman_h(ext, lift(s1), lift(s2), H_up, /*check_closed=*/false);

  ContactSection out(n);
  for (unsigned i = 0; i < n; ++i) {
    for (const auto& [e, v] : res.X[i].terms()) {
      if (e[n] != 0) fail(errc::reduction, "reduced bracket depends on the fiber variable");
      out.X[i].add_term(std::vector<unsigned>(e.begin(), e.end() - 1), v);
    }
  }
  Poly f_up = res.X[n];
  for (const auto& [e, v] : f_up.terms())
    out.f.add_term(std::vector<unsigned>(e.begin(), e.end() - 1), v);
  auto [xi0, xi1] = split_circle(res.xi, n);
  out.xi = xi0;
  out.g = xi1.coefficient(0);
  return out;
}

namespace {

struct ContactBracket {
  const FrameAlgebra& frame;
  Twists twists;
  BracketCorruption corruption;

  ContactSection operator()(const ContactSection& a, const ContactSection& b) const {
    switch (corruption) {
      case BracketCorruption::none:
        return dorfman_contact(frame, a, b, twists, /*check_mc=*/false);
      case BracketCorruption::literal_cross:
        return dorfman_contact_literal(frame, a, b, twists);
      case BracketCorruption::drop_twist: {
        Twists none(frame.dim());
        return dorfman_contact(frame, a, b, none, false);
      }
      case BracketCorruption::antisymmetrize: {
        ContactSection ab = dorfman_contact(frame, a, b, twists, false);
        ContactSection ba = dorfman_contact(frame, b, a, twists, false);
        return (ab - ba) * Scalar(Rational(1, 2));
      }
    }
    fail(errc::input, "unknown corruption mode");
  }
};

std::string describe(const ContactSection& s) {
  std::ostringstream os;
  os << "(X=[";
  for (unsigned i = 0; i < s.dim(); ++i) os << (i ? ", " : "") << s.X[i].str();
  os << "], f=" << s.f.str() << ", g=" << s.g.str() << ", xi=" << s.xi.str() << ")";
  return os.str();
}

}  // namespace

Report check_courant_axioms(const FrameAlgebra& frame, const AxiomCheckConfig& cfg) {
  Report rep;
  if (cfg.trials < 1) fail(errc::input, "check_courant_axioms requires trials >= 1");

  const bool standard = cfg.kind == BracketKind::standard_h;
  // The standard bracket is run through its contact embedding (f = g = 0,
  // H2 = F = 0), under which dorfman_contact restricts to dorfman_h.
  Twists tw(frame.dim());
  if (standard)
    tw.H3 = cfg.twists.H3;
  else
    tw = cfg.twists;
  ContactBracket bracket{frame, tw, cfg.corruption};

  std::string label = standard ? "standard" : "contact";
  if (cfg.corruption != BracketCorruption::none) label += ".corrupted";

  SplitMix64 rng(cfg.seed);
  auto random_section = [&]() {
    ContactSection s(frame.dim());
    s.X = random_vector(rng, frame);
    s.xi = random_form(rng, frame, 1);
    if (!standard) {
      s.f = random_poly(rng, frame);
      s.g = random_poly(rng, frame);
    }
    return s;
  };

  bool leibniz_ok = true, invar_ok = true, square_ok = true;
  std::string leibniz_res, invar_res, square_res;
  std::string leibniz_note, invar_note, square_note;

  for (unsigned trial = 0; trial < cfg.trials; ++trial) {
    ContactSection e1 = random_section();
    ContactSection e2 = random_section();
    ContactSection e3 = random_section();

    if (leibniz_ok) {
      ContactSection lhs = bracket(e1, bracket(e2, e3));
      ContactSection rhs = bracket(bracket(e1, e2), e3) + bracket(e2, bracket(e1, e3));
      ContactSection diff = lhs - rhs;
      if (!diff.is_zero()) {
        leibniz_ok = false;
        leibniz_res = describe(diff);
        leibniz_note = "trial " + std::to_string(trial) + ": e1=" + describe(e1) +
                       " e2=" + describe(e2) + " e3=" + describe(e3);
      }
    }
    if (invar_ok) {
      Poly lhs = frame.apply_vector(e3.X, pairing_contact(e1, e2));
      Poly rhs = pairing_contact(bracket(e3, e1), e2) + pairing_contact(e1, bracket(e3, e2));
      Poly diff = lhs - rhs;
      if (!diff.is_zero()) {
        invar_ok = false;
        invar_res = diff.str();
        invar_note = "trial " + std::to_string(trial) + ": e1=" + describe(e1) +
                     " e2=" + describe(e2) + " e3=" + describe(e3);
      }
    }
    if (square_ok) {
      ContactSection lhs = bracket(e1, e1);
      ContactSection rhs = d_operator_contact(frame, pairing_contact(e1, e1));
      ContactSection diff = lhs - rhs;
      if (!diff.is_zero()) {
        square_ok = false;
        square_res = describe(diff);
        square_note = "trial " + std::to_string(trial) + ": e=" + describe(e1);
      }
    }
    if (!leibniz_ok && !invar_ok && !square_ok) break;
  }

  std::string suffix = " (" + std::to_string(cfg.trials) + " trials, seed " +
                       std::to_string(cfg.seed) + ")";
  rep.check(label + ".leibniz", leibniz_ok, leibniz_res,
            leibniz_ok ? "exact equality" + suffix : leibniz_note);
  rep.check(label + ".pairing_invariance", invar_ok, invar_res,
            invar_ok ? "exact equality" + suffix : invar_note);
  rep.check(label + ".square_is_D", square_ok, square_res,
            square_ok ? "exact equality" + suffix : square_note);
  return rep;
}

}  // namespace gcgeo
