#include "gcgeo/sekiya.hpp"

#include "gcgeo/error.hpp"

namespace gcgeo {

ScalarMatrix pairing_matrix_tm(unsigned dim) {
  ScalarMatrix p(2 * dim, 2 * dim);
  Scalar half(Rational(1, 2));
  for (unsigned i = 0; i < dim; ++i) {
    p.at(i, dim + i) = half;
    p.at(dim + i, i) = half;
  }
  return p;
}

ScalarMatrix pairing_matrix_contact(unsigned dim) {
  ScalarMatrix p(2 * dim + 2, 2 * dim + 2);
  Scalar half(Rational(1, 2));
  for (unsigned i = 0; i < dim; ++i) {
    p.at(i, dim + 2 + i) = half;
    p.at(dim + 2 + i, i) = half;
  }
  p.at(dim, dim + 1) = half;
  p.at(dim + 1, dim) = half;
  return p;
}

std::vector<Poly> apply_endo_tm(const PolyMatrix& endo, const GenSection& s) {
  return endo.apply(section_coords_tm(s));
}

GenSection endo_apply(const PolyMatrix& endo, const GenSection& s) {
  unsigned n = s.dim();
  std::vector<Poly> v = endo.apply(section_coords_tm(s));
  GenSection out(n);
  for (unsigned i = 0; i < n; ++i) out.X[i] = v[i];
  for (unsigned k = 1; k <= n; ++k) out.xi.add_term(blade::Mask(1) << (k - 1), v[n + k - 1]);
  return out;
}

namespace {

PolyMatrix scalar_to_poly(const ScalarMatrix& m, unsigned nvars) {
  PolyMatrix out(m.rows(), nvars);
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) out.at(r, c) = Poly(nvars, m.at(r, c));
  return out;
}

// Skewness of E w.r.t. the Gram matrix P: P E must be antisymmetric.
bool skew_wrt(const ScalarMatrix& gram, const PolyMatrix& endo) {
  PolyMatrix pe = scalar_to_poly(gram, endo.nvars()) * endo;
  return (pe + pe.transpose()).is_zero();
}

}  // namespace

Report validate_sekiya(const FrameAlgebra& frame, const SekiyaQuadruple& q) {
  Report r;
  unsigned n = frame.dim();
  if (q.Phi.size() != 2 * n) fail(errc::input, "Phi must be 2n x 2n");
  frame.require_legal(q.e1.xi, "validate_sekiya");
  frame.require_legal(q.e2.xi, "validate_sekiya");

  Poly p11 = pairing_tm(q.e1, q.e1);
  Poly p22 = pairing_tm(q.e2, q.e2);
  Poly p12 = pairing_tm(q.e1, q.e2) - Poly(n, Scalar(Rational(1, 2)));
  r.check("sekiya.<e1,e1>=0", p11.is_zero(), p11.str());
  r.check("sekiya.<e2,e2>=0", p22.is_zero(), p22.str());
  r.check("sekiya.<e1,e2>=1/2", p12.is_zero(), p12.str());

  r.check("sekiya.Phi_skew", skew_wrt(pairing_matrix_tm(n), q.Phi), "",
          "Phi* = -Phi w.r.t. the TM+T*M pairing");

  GenSection f1 = endo_apply(q.Phi, q.e1) - q.e1 * q.lambda;
  GenSection f2 = endo_apply(q.Phi, q.e2) + q.e2 * q.lambda;
  r.check("sekiya.Phi(e1)=lambda_e1", f1.is_zero(),
          f1.xi.str() + " | X-part zero: " + (f1.X.is_zero() ? "yes" : "no"));
  r.check("sekiya.Phi(e2)=-lambda_e2", f2.is_zero(),
          f2.xi.str() + " | X-part zero: " + (f2.X.is_zero() ? "yes" : "no"));

  // Phi^2(v) = -v + 2(1+lambda^2)(<v,e2> e1 + <v,e1> e2), column by column.
  Scalar factor = (Scalar(1) + q.lambda * q.lambda) * Scalar(2);
  PolyMatrix rhs(2 * n, n);
  std::vector<Poly> ce1 = section_coords_tm(q.e1);
  std::vector<Poly> ce2 = section_coords_tm(q.e2);
  ScalarMatrix gram = pairing_matrix_tm(n);
  for (unsigned col = 0; col < 2 * n; ++col) {
    // <v,e_j> for the basis vector v = u_col.
    Poly ve1(n), ve2(n);
    for (unsigned k = 0; k < 2 * n; ++k) {
      if (!gram.at(col, k).is_zero()) {
        ve1 += ce1[k] * gram.at(col, k);
        ve2 += ce2[k] * gram.at(col, k);
      }
    }
    for (unsigned row = 0; row < 2 * n; ++row) {
      Poly v = ve2 * ce1[row] + ve1 * ce2[row];
      rhs.at(row, col) = v * factor;
      if (row == col) rhs.at(row, col) -= Poly(n, Scalar(1));
    }
  }
  PolyMatrix phi2 = q.Phi * q.Phi;
  PolyMatrix resid = phi2 - rhs;
  r.check("sekiya.Phi^2_identity", resid.is_zero(),
          resid.is_zero() ? "" : "nonzero Phi^2 residual matrix");

  Scalar mu2 = q.mu * q.mu - (Scalar(1) + q.lambda * q.lambda);
  r.check("sekiya.pythagorean", mu2.is_zero(), to_string(mu2), "mu^2 = 1 + lambda^2");
  return r;
}

PolyMatrix assemble_jinv(const FrameAlgebra& frame, const SekiyaQuadruple& q, bool validate) {
  if (validate && !validate_sekiya(frame, q).all_pass())
    fail(errc::structure, "assemble_jinv: quadruple does not satisfy the Sekiya axioms");
  unsigned n = frame.dim();
  PolyMatrix j(2 * n + 2, n);
  std::vector<Poly> ce1 = section_coords_tm(q.e1);
  std::vector<Poly> ce2 = section_coords_tm(q.e2);
  ScalarMatrix gram = pairing_matrix_tm(n);

  auto tm_row = [&](unsigned tm_index) { return tm_index < n ? tm_index : tm_index + 2; };

  // TM block and the two pairing rows.
  for (unsigned col = 0; col < 2 * n; ++col) {
    for (unsigned row = 0; row < 2 * n; ++row) j.at(tm_row(row), tm_row(col)) = q.Phi.at(row, col);
    Poly ve1(n), ve2(n);
    for (unsigned k = 0; k < 2 * n; ++k) {
      if (!gram.at(col, k).is_zero()) {
        ve1 += ce1[k] * gram.at(col, k);
        ve2 += ce2[k] * gram.at(col, k);
      }
    }
    j.at(n, tm_row(col)) = ve2 * (q.mu * Scalar(-2));      // -2 mu <e2, v>
    j.at(n + 1, tm_row(col)) = ve1 * (q.mu * Scalar(-2));  // -2 mu <e1, v>
  }
  // f and g columns: mu e1, mu e2 and the -lambda / +lambda diagonal.
  for (unsigned row = 0; row < 2 * n; ++row) {
    j.at(tm_row(row), n) = ce1[row] * q.mu;
    j.at(tm_row(row), n + 1) = ce2[row] * q.mu;
  }
  j.at(n, n) = Poly(n, -q.lambda);
  j.at(n + 1, n + 1) = Poly(n, q.lambda);
  return j;
}

JinvShape extract_jinv_shape(const FrameAlgebra& frame, const PolyMatrix& J) {
  JinvShape s;
  unsigned n = frame.dim();
  if (J.size() != 2 * n + 2) {
    s.why = "wrong size";
    return s;
  }
  const Poly& ff = J.at(n, n);
  const Poly& gg = J.at(n + 1, n + 1);
  if (!ff.is_constant() || !gg.is_constant()) {
    s.why = "non-constant lambda entries";
    return s;
  }
  if (!(ff + gg).is_zero() || !J.at(n, n + 1).is_zero() || !J.at(n + 1, n).is_zero()) {
    s.why = "f/g block is not diag(-lambda, +lambda)";
    return s;
  }
  s.lambda = gg.constant_value();
  auto tm_row = [&](unsigned tm_index) { return tm_index < n ? tm_index : tm_index + 2; };
  std::vector<Poly> c1(2 * n, Poly(n)), c2(2 * n, Poly(n));
  for (unsigned row = 0; row < 2 * n; ++row) {
    c1[row] = J.at(tm_row(row), n);
    c2[row] = J.at(tm_row(row), n + 1);
  }
  auto build = [&](const std::vector<Poly>& v) {
    GenSection g(n);
    for (unsigned i = 0; i < n; ++i) g.X[i] = v[i];
    for (unsigned k = 1; k <= n; ++k) g.xi.add_term(blade::Mask(1) << (k - 1), v[n + k - 1]);
    return g;
  };
  s.mu_e1 = build(c1);
  s.mu_e2 = build(c2);
  s.Phi = PolyMatrix(2 * n, n);
  for (unsigned row = 0; row < 2 * n; ++row)
    for (unsigned col = 0; col < 2 * n; ++col)
      s.Phi.at(row, col) = J.at(tm_row(row), tm_row(col));
  s.ok = true;
  return s;
}

namespace {

GenSection eB_section(const FrameAlgebra& frame, const Polyform& B, const GenSection& s) {
  (void)frame;
  return {s.X, s.xi + contract(s.X, B)};
}

}  // namespace

SeksymmLiteral seksymm_literal(const FrameAlgebra& frame, const BbaTransform& t,
                               const SekiyaQuadruple& q) {
  unsigned n = frame.dim();
  Scalar two(2);

  GenSection a_sec(n), b_sec(n);
  a_sec.xi = t.a;
  b_sec.xi = t.b;
  GenSection phi_a = endo_apply(q.Phi, a_sec);
  GenSection phi_b = endo_apply(q.Phi, b_sec);

  Poly l_b_phia = pairing_tm(b_sec, phi_a);
  Poly l_e1a = pairing_tm(q.e1, a_sec);
  Poly l_e2b = pairing_tm(q.e2, b_sec);
  Poly lambda_poly = Poly(n, q.lambda) + l_b_phia * two + l_e1a * (q.mu * two) -
                     l_e2b * (q.mu * two);
  if (!lambda_poly.is_constant())
    fail(errc::unrepresentable, "literal lambda' is not constant");
  Scalar lambda = lambda_poly.constant_value();

  SeksymmLiteral out{PolyMatrix(2 * n, n), GenSection(n), GenSection(n), lambda};

  GenSection eBe1 = eB_section(frame, t.B, q.e1);
  GenSection eBe2 = eB_section(frame, t.B, q.e2);
  GenSection eBphib = eB_section(frame, t.B, phi_b);
  GenSection eBphia = eB_section(frame, t.B, phi_a);

  Poly l_e1b = pairing_tm(q.e1, b_sec);
  Poly l_e2a = pairing_tm(q.e2, a_sec);

  // mu' e1' = mu e^B e1 - lambda' b + mu<e1,b> a + mu<e1,a> b - e^B Phi(b)
  GenSection mu_e1 = eBe1 * q.mu - b_sec * lambda;
  mu_e1 = mu_e1 + GenSection{VectorField(n), t.a * (l_e1b * q.mu)};
  mu_e1 = mu_e1 + GenSection{VectorField(n), t.b * (l_e1a * q.mu)};
  mu_e1 = mu_e1 - eBphib;
  out.mu_e1 = mu_e1;

  // mu' e2' = mu e^B e2 + lambda' a + mu<e2,a> b + mu<e2,b> a - e^B Phi(a)
  GenSection mu_e2 = eBe2 * q.mu + a_sec * lambda;
  mu_e2 = mu_e2 + GenSection{VectorField(n), t.b * (l_e2a * q.mu)};
  mu_e2 = mu_e2 + GenSection{VectorField(n), t.a * (l_e2b * q.mu)};
  mu_e2 = mu_e2 - eBphia;
  out.mu_e2 = mu_e2;

  // Phi'(v), column by column over the basis of TM + T*M.
  Poly l_a_phib = pairing_tm(a_sec, phi_b);
  for (unsigned col = 0; col < 2 * n; ++col) {
    std::vector<Scalar> unit(2 * n);
    unit[col] = Scalar(1);
    GenSection v = section_from_coords_tm(n, unit);

    GenSection eBv{v.X, v.xi + contract(v.X, -t.B)};  // e^{-B} v
    GenSection acc = eB_section(frame, t.B, endo_apply(q.Phi, eBv));

    Poly va = pairing_tm(v, a_sec);
    Poly vb = pairing_tm(v, b_sec);
    acc = acc - phi_b * va - phi_a * vb;
    acc = acc + q.e1 * (va * (q.mu * two)) + q.e2 * (vb * (q.mu * two));

    Poly c_b = pairing_tm(eBphia, v) - l_e1a * va * (q.mu * two) -
               l_e2a * vb * (q.mu * two) - pairing_tm(eBe2, v) * (q.mu * two);
    Poly c_a = pairing_tm(eBphib, v) - l_e2b * vb * (q.mu * two) -
               l_e1b * va * (q.mu * two) - pairing_tm(eBe1, v) * (q.mu * two);
    c_b += l_a_phib * va;
    c_a += l_b_phia * vb;
    acc = acc + GenSection{VectorField(n), t.b * c_b + t.a * c_a};

    std::vector<Poly> coords = section_coords_tm(acc);
    for (unsigned row = 0; row < 2 * n; ++row) out.Phi.at(row, col) = coords[row];
  }
  return out;
}

SekiyaTransformResult transform_sekiya(const FrameAlgebra& frame, const BbaTransform& t,
                                       const SekiyaQuadruple& q) {
  unsigned n = frame.dim();
  Report axioms = validate_sekiya(frame, q);
  if (!axioms.all_pass())
    fail(errc::structure, "transform_sekiya: input quadruple does not validate");

  PolyMatrix J = assemble_jinv(frame, q, /*validate=*/false);
  PolyMatrix S = section_transform_matrix(frame, t);
  PolyMatrix Sinv = section_transform_matrix(frame, t.inverse());
  PolyMatrix conj = S * J * Sinv;

  JinvShape shape = extract_jinv_shape(frame, conj);
  if (!shape.ok)
    fail(errc::structure, "conjugated endomorphism lost the invariant shape: " + shape.why);

  Scalar mu2 = Scalar(1) + shape.lambda * shape.lambda;
  if (!mu2.is_real())
    fail(errc::unrepresentable, "1 + lambda'^2 is not real: " + to_string(mu2));
  auto root = exact_sqrt(mu2.re);
  if (!root)
    fail(errc::unrepresentable,
         "unrepresentable deformation: 1 + lambda'^2 = " + to_string(mu2) +
             " has no rational square root");

  SekiyaTransformResult res{SekiyaQuadruple(n), conj, PolyMatrix(2 * n + 2, n),
                            PolyMatrix(2 * n + 2, n), Scalar()};
  Scalar mu(*root);
  Scalar inv_mu = mu.inverse();
  res.quadruple.Phi = shape.Phi;
  res.quadruple.e1 = shape.mu_e1 * inv_mu;
  res.quadruple.e2 = shape.mu_e2 * inv_mu;
  res.quadruple.lambda = shape.lambda;
  res.quadruple.mu = mu;

  // Assemble the literal formulas into the same matrix layout: the rows
  // -2<mu e_i, .> need no square root.
  SeksymmLiteral lit = seksymm_literal(frame, t, q);
  res.lambda_literal = lit.lambda;
  PolyMatrix L(2 * n + 2, n);
  auto tm_row = [&](unsigned tm_index) { return tm_index < n ? tm_index : tm_index + 2; };
  std::vector<Poly> c1 = section_coords_tm(lit.mu_e1);
  std::vector<Poly> c2 = section_coords_tm(lit.mu_e2);
  ScalarMatrix gram = pairing_matrix_tm(n);
  for (unsigned col = 0; col < 2 * n; ++col) {
    for (unsigned row = 0; row < 2 * n; ++row) L.at(tm_row(row), tm_row(col)) = lit.Phi.at(row, col);
    Poly ve1(n), ve2(n);
    for (unsigned k = 0; k < 2 * n; ++k) {
      if (!gram.at(col, k).is_zero()) {
        ve1 += c1[k] * gram.at(col, k);
        ve2 += c2[k] * gram.at(col, k);
      }
    }
    L.at(n, tm_row(col)) = ve2 * Scalar(-2);
    L.at(n + 1, tm_row(col)) = ve1 * Scalar(-2);
  }
  for (unsigned row = 0; row < 2 * n; ++row) {
    L.at(tm_row(row), n) = c1[row];
    L.at(tm_row(row), n + 1) = c2[row];
  }
  L.at(n, n) = Poly(n, -lit.lambda);
  L.at(n + 1, n + 1) = Poly(n, lit.lambda);
  res.literal = L;
  res.literal_residual = conj - L;
  return res;
}

SekiyaQuadruple sekiya_swap(const SekiyaQuadruple& q) {
  SekiyaQuadruple out = q;
  out.e1 = q.e2;
  out.e2 = q.e1;
  out.lambda = -q.lambda;
  return out;
}

}  // namespace gcgeo
