#include "gcgeo/metric.hpp"

#include "gcgeo/error.hpp"

namespace gcgeo {

namespace {

std::vector<Scalar> scalar_point(unsigned dim, const std::vector<Rational>& pt) {
  if (pt.size() != dim) fail(errc::input, "sample point dimension mismatch");
  std::vector<Scalar> out;
  for (const auto& r : pt) out.push_back(Scalar(r));
  return out;
}

}  // namespace

Report validate_metric(const FrameAlgebra& frame, const GenContactMetric& m) {
  Report r;
  unsigned n = frame.dim();
  if (m.g.size() != n) fail(errc::input, "metric matrix must be n x n");
  require_bba(frame, m.transform);

  PolyMatrix sym = m.g - m.g.transpose();
  r.check("metric.symmetric", sym.is_zero(), "", "g must be symmetric");

  std::vector<std::vector<Rational>> points = m.sample_points;
  if (points.empty() && m.g.all_constant() && m.h.is_constant())
    points.push_back(std::vector<Rational>(n, Rational(0)));

  for (size_t pi = 0; pi < points.size(); ++pi) {
    std::vector<Scalar> pt = scalar_point(n, points[pi]);
    ScalarMatrix gv = m.g.eval(pt);
    bool positive = true;
    std::string why;
    // Sylvester: all leading principal minors strictly positive.
    for (unsigned k = 1; k <= n && positive; ++k) {
      ScalarMatrix minor(k, k);
      for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j) minor.at(i, j) = gv.at(i, j);
      Scalar det = minor.det();
      if (!det.is_real() || !(det.re > 0)) {
        positive = false;
        why = "leading minor " + std::to_string(k) + " = " + to_string(det);
      }
    }
    r.check("metric.positive_definite.point" + std::to_string(pi), positive, why,
            "Sylvester leading minors");
    Scalar hv = m.h.eval(pt);
    r.check("metric.h_nonzero.point" + std::to_string(pi), !hv.is_zero(), "0", "");
  }
  return r;
}

MetricSubspaces metric_subspaces(const FrameAlgebra& frame, const GenContactMetric& m) {
  Report v = validate_metric(frame, m);
  if (!v.all_pass()) fail(errc::metric, "metric invariants fail at a sample point");
  unsigned n = frame.dim();
  Poly h2 = m.h * m.h;
  MetricSubspaces out;
  for (unsigned i = 0; i < n; ++i) {
    ContactSection plus(n), minus(n);
    plus.X = VectorField::basis(n, i + 1);
    minus.X = plus.X;
    for (unsigned k = 1; k <= n; ++k) {
      const Poly& gik = m.g.at(k - 1, i);
      if (gik.is_zero()) continue;
      plus.xi.add_term(blade::Mask(1) << (k - 1), gik);
      minus.xi.add_term(blade::Mask(1) << (k - 1), -gik);
    }
    out.c_plus.push_back(transform_section(frame, m.transform, plus));
    out.c_minus.push_back(transform_section(frame, m.transform, minus));
  }
  ContactSection fplus(n), fminus(n);
  fplus.f = Poly(n, Scalar(1));
  fplus.g = h2;
  fminus.f = Poly(n, Scalar(1));
  fminus.g = -h2;
  out.c_plus.push_back(transform_section(frame, m.transform, fplus));
  out.c_minus.push_back(transform_section(frame, m.transform, fminus));
  return out;
}

PolyMatrix metric_endomorphism(const FrameAlgebra& frame, const GenContactMetric& m) {
  Report v = validate_metric(frame, m);
  if (!v.all_pass()) fail(errc::metric, "metric invariants fail at a sample point");
  unsigned n = frame.dim();
  if (!m.g.all_constant() || !m.h.is_constant())
    fail(errc::metric, "metric endomorphism requires constant g and h");
  ScalarMatrix gc = m.g.constant_part();
  auto ginv = gc.inverse();
  if (!ginv) fail(errc::metric, "metric matrix is singular");
  Scalar h2 = m.h.constant_value() * m.h.constant_value();
  if (h2.is_zero()) fail(errc::metric, "h must be nonzero");

  PolyMatrix g0(2 * n + 2, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (!ginv->at(i, j).is_zero()) g0.at(i, n + 2 + j) = Poly(n, ginv->at(i, j));
      if (!gc.at(i, j).is_zero()) g0.at(n + 2 + i, j) = Poly(n, gc.at(i, j));
    }
  g0.at(n, n + 1) = Poly(n, h2.inverse());
  g0.at(n + 1, n) = Poly(n, h2);

  PolyMatrix S = section_transform_matrix(frame, m.transform);
  PolyMatrix Sinv = section_transform_matrix(frame, m.transform.inverse());
  return S * g0 * Sinv;
}

namespace {

bool constant_section(const GenSection& s) {
  for (unsigned i = 0; i < s.dim(); ++i)
    if (!s.X[i].is_constant()) return false;
  for (const auto& [m, c] : s.xi.terms())
    if (!c.is_constant()) return false;
  return true;
}

std::vector<Scalar> constant_coords(const GenSection& s) {
  std::vector<Scalar> out;
  for (const auto& p : section_coords_tm(s)) out.push_back(p.constant_value());
  return out;
}

}  // namespace

Report check_cokahler(const FrameAlgebra& frame, const SekiyaQuadruple& q1,
                      const SekiyaQuadruple& q2, const GenContactMetric& m) {
  Report r;
  Report v1 = validate_sekiya(frame, q1);
  Report v2 = validate_sekiya(frame, q2);
  r.check("cokahler.q1_valid", v1.all_pass(), v1.all_pass() ? "" : v1.text());
  r.check("cokahler.q2_valid", v2.all_pass(), v2.all_pass() ? "" : v2.text());
  if (!v1.all_pass() || !v2.all_pass()) return r;

  PolyMatrix j1 = assemble_jinv(frame, q1, false);
  PolyMatrix j2 = assemble_jinv(frame, q2, false);
  PolyMatrix commutator = j1 * j2 - j2 * j1;
  r.check("cokahler.commute", commutator.is_zero(), "", "J1 J2 = J2 J1");

  PolyMatrix G = metric_endomorphism(frame, m);
  PolyMatrix prod = (j1 * j2) + G;
  r.check("cokahler.product_is_metric", prod.is_zero(), "", "-J1 J2 = G");

  // Kernel-line condition: C e1 + C e2 agree as 2-planes (constant sections).
  bool spans_ok;
  if (constant_section(q1.e1) && constant_section(q1.e2) && constant_section(q2.e1) &&
      constant_section(q2.e2)) {
    spans_ok = same_span({constant_coords(q1.e1), constant_coords(q1.e2)},
                         {constant_coords(q2.e1), constant_coords(q2.e2)});
  } else {
    spans_ok = false;
  }
  r.check("cokahler.e_span", spans_ok, "", "C e1 + C e2 must agree");

  bool direct = (q1.lambda == q2.lambda) && q1.e1 == q2.e1 && q1.e2 == q2.e2;
  bool swapped = q1.e1 == q2.e2 && q1.e2 == q2.e1;
  bool o11 = q1.lambda.is_zero() && q2.lambda.is_zero() && spans_ok;
  r.check("cokahler.e_matching", direct || swapped || o11, "",
          direct ? "identical sections"
                 : (swapped ? "swapped sections" : "O(1,1)-related at lambda = 0"));
  return r;
}

}  // namespace gcgeo
