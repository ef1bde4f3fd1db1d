#include "gcgeo/json_io.hpp"

#include "gcgeo/error.hpp"

namespace gcgeo {

Json to_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(Rational(j.get<long long>()));
  if (j.is_string()) return scalar_from_string(j.get<std::string>());
  fail(errc::parse, "Scalar must be a string like \"p/q\" or \"p/q+r/s*i\"");
}

Json to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["c"] = to_json(c);
    t["exp"] = e;
    terms.push_back(t);
  }
  return terms;
}

Poly poly_from_json(const Json& j, unsigned nvars) {
  // Scalars are accepted as constant-Poly shorthand on input.
  if (j.is_string() || j.is_number_integer()) return Poly(nvars, scalar_from_json(j));
  if (!j.is_array()) fail(errc::parse, "Poly must be a list of {c, exp} terms");
  Poly p(nvars);
  for (const auto& t : j) {
    if (!t.contains("c") || !t.contains("exp"))
      fail(errc::parse, "Poly term needs \"c\" and \"exp\"");
    std::vector<unsigned> e = t["exp"].get<std::vector<unsigned>>();
    if (e.size() != nvars) fail(errc::parse, "Poly exponent vector must have length n");
    p.add_term(e, scalar_from_json(t["c"]));
  }
  return p;
}

Json to_json(const Polyform& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json t;
    t["blade"] = blade::indices(m);
    t["coeff"] = to_json(c);
    terms.push_back(t);
  }
  return terms;
}

Polyform polyform_from_json(const Json& j, unsigned dim) {
  if (!j.is_array()) fail(errc::parse, "Polyform must be a list of {coeff, blade} terms");
  Polyform f(dim);
  for (const auto& t : j) {
    if (!t.contains("coeff") || !t.contains("blade"))
      fail(errc::parse, "Polyform term needs \"coeff\" and \"blade\"");
    auto idx = t["blade"].get<std::vector<unsigned>>();
    f.add_term(blade::from_indices(idx, dim), poly_from_json(t["coeff"], dim));
  }
  return f;
}

Json to_json(const VectorField& v) {
  Json out = Json::array();
  for (unsigned i = 0; i < v.dim(); ++i) out.push_back(to_json(v[i]));
  return out;
}

VectorField vector_from_json(const Json& j, unsigned dim) {
  if (!j.is_array() || j.size() != dim)
    fail(errc::parse, "Vector must be a list of n Polys");
  VectorField v(dim);
  for (unsigned i = 0; i < dim; ++i) v[i] = poly_from_json(j[i], dim);
  return v;
}

Json to_json(const FrameAlgebra& f) {
  Json j;
  j["dim"] = f.dim();
  j["mode"] = f.mode() == FrameMode::coordinate ? "coordinate" : "invariant";
  if (f.mode() == FrameMode::invariant) {
    bool nil_ok = true;
    try {
      j["nil"] = nil_string(f);
    } catch (const gc_error&) {
      nil_ok = false;
    }
    if (!nil_ok) {
      Json d;
      for (unsigned k = 1; k <= f.dim(); ++k)
        if (!f.d_generator(k).is_zero()) d[std::to_string(k)] = to_json(f.d_generator(k));
      j["d"] = d;
    }
  }
  return j;
}

FrameAlgebra frame_from_json(const Json& j) {
  if (!j.contains("dim")) fail(errc::parse, "frame needs \"dim\"");
  unsigned dim = j["dim"].get<unsigned>();
  std::string mode = j.value("mode", std::string("coordinate"));
  if (mode == "coordinate") return FrameAlgebra::coordinate(dim);
  if (mode != "invariant") fail(errc::parse, "frame mode must be coordinate or invariant");
  if (j.contains("nil")) return parse_nil(j["nil"].get<std::string>(), dim);
  std::vector<Polyform> d_gen(dim, Polyform(dim));
  if (j.contains("d")) {
    for (const auto& [key, val] : j["d"].items()) {
      unsigned k = static_cast<unsigned>(std::stoul(key));
      if (k == 0 || k > dim) fail(errc::parse, "frame d index out of range");
      d_gen[k - 1] = polyform_from_json(val, dim);
    }
  }
  return FrameAlgebra::invariant(dim, std::move(d_gen));
}

Json to_json(const GenSection& s) {
  Json j;
  j["X"] = to_json(s.X);
  j["xi"] = to_json(s.xi);
  return j;
}

GenSection gen_section_from_json(const Json& j, unsigned dim) {
  GenSection s(dim);
  if (j.contains("X")) s.X = vector_from_json(j["X"], dim);
  if (j.contains("xi")) s.xi = polyform_from_json(j["xi"], dim);
  return s;
}

Json to_json(const ContactSection& s) {
  Json j;
  j["X"] = to_json(s.X);
  j["f"] = to_json(s.f);
  j["g"] = to_json(s.g);
  j["xi"] = to_json(s.xi);
  return j;
}

ContactSection contact_section_from_json(const Json& j, unsigned dim) {
  ContactSection s(dim);
  if (j.contains("X")) s.X = vector_from_json(j["X"], dim);
  if (j.contains("f")) s.f = poly_from_json(j["f"], dim);
  if (j.contains("g")) s.g = poly_from_json(j["g"], dim);
  if (j.contains("xi")) s.xi = polyform_from_json(j["xi"], dim);
  return s;
}

Json to_json(const Twists& t) {
  Json j;
  j["H3"] = to_json(t.H3);
  j["H2"] = to_json(t.H2);
  j["F"] = to_json(t.F);
  return j;
}

Twists twists_from_json(const Json& j, unsigned dim) {
  Twists t(dim);
  if (j.contains("H3")) t.H3 = polyform_from_json(j["H3"], dim);
  if (j.contains("H2")) t.H2 = polyform_from_json(j["H2"], dim);
  if (j.contains("F")) t.F = polyform_from_json(j["F"], dim);
  return t;
}

Json to_json(const MixedPair& mp) {
  Json j;
  j["phi"] = to_json(mp.phi);
  j["psi"] = to_json(mp.psi);
  j["e1"] = to_json(mp.e1);
  j["e2"] = to_json(mp.e2);
  j["lambda"] = to_json(mp.lambda);
  j["mu"] = to_json(mp.mu);
  return j;
}

MixedPair mixed_pair_from_json(const Json& j, unsigned dim) {
  MixedPair mp(dim);
  if (j.contains("phi")) mp.phi = polyform_from_json(j["phi"], dim);
  if (j.contains("psi")) mp.psi = polyform_from_json(j["psi"], dim);
  if (j.contains("e1")) mp.e1 = gen_section_from_json(j["e1"], dim);
  if (j.contains("e2")) mp.e2 = gen_section_from_json(j["e2"], dim);
  mp.lambda = j.contains("lambda") ? scalar_from_json(j["lambda"]) : Scalar(0);
  mp.mu = j.contains("mu") ? scalar_from_json(j["mu"]) : Scalar(1);
  return mp;
}

Json to_json(const BbaTransform& t) {
  Json j;
  j["B"] = to_json(t.B);
  j["b"] = to_json(t.b);
  j["a"] = to_json(t.a);
  return j;
}

BbaTransform bba_from_json(const Json& j, unsigned dim) {
  BbaTransform t(dim);
  if (j.contains("B")) t.B = polyform_from_json(j["B"], dim);
  if (j.contains("b")) t.b = polyform_from_json(j["b"], dim);
  if (j.contains("a")) t.a = polyform_from_json(j["a"], dim);
  return t;
}

Json to_json(const FrameAlgebra& frame, const SekiyaQuadruple& q) {
  (void)frame;
  Json j;
  Json rows = Json::array();
  for (size_t r = 0; r < q.Phi.size(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < q.Phi.size(); ++c) row.push_back(to_json(q.Phi.at(r, c)));
    rows.push_back(row);
  }
  j["Phi"] = rows;
  j["e1"] = to_json(q.e1);
  j["e2"] = to_json(q.e2);
  j["lambda"] = to_json(q.lambda);
  j["mu"] = to_json(q.mu);
  return j;
}

SekiyaQuadruple sekiya_from_json(const Json& j, unsigned dim) {
  SekiyaQuadruple q(dim);
  if (j.contains("Phi")) {
    const Json& rows = j["Phi"];
    if (!rows.is_array() || rows.size() != 2 * dim)
      fail(errc::parse, "Phi must be a 2n x 2n matrix of Polys");
    for (size_t r = 0; r < 2 * dim; ++r) {
      if (rows[r].size() != 2 * dim) fail(errc::parse, "Phi row length mismatch");
      for (size_t c = 0; c < 2 * dim; ++c) q.Phi.at(r, c) = poly_from_json(rows[r][c], dim);
    }
  }
  if (j.contains("e1")) q.e1 = gen_section_from_json(j["e1"], dim);
  if (j.contains("e2")) q.e2 = gen_section_from_json(j["e2"], dim);
  q.lambda = j.contains("lambda") ? scalar_from_json(j["lambda"]) : Scalar(0);
  q.mu = j.contains("mu") ? scalar_from_json(j["mu"]) : Scalar(1);
  return q;
}

Json to_json(const FrameAlgebra& frame, const GenContactMetric& m) {
  (void)frame;
  Json j;
  Json rows = Json::array();
  for (size_t r = 0; r < m.g.size(); ++r) {
    Json row = Json::array();
    for (size_t c = 0; c < m.g.size(); ++c) row.push_back(to_json(m.g.at(r, c)));
    rows.push_back(row);
  }
  j["g"] = rows;
  j["h"] = to_json(m.h);
  j["transform"] = to_json(m.transform);
  Json pts = Json::array();
  for (const auto& pt : m.sample_points) {
    Json p = Json::array();
    for (const auto& r : pt) p.push_back(rational_to_string(r));
    pts.push_back(p);
  }
  j["sample_points"] = pts;
  return j;
}

GenContactMetric metric_from_json(const Json& j, unsigned dim) {
  GenContactMetric m(dim);
  if (j.contains("g")) {
    const Json& rows = j["g"];
    if (!rows.is_array() || rows.size() != dim)
      fail(errc::parse, "metric g must be an n x n matrix of Polys");
    for (size_t r = 0; r < dim; ++r) {
      if (rows[r].size() != dim) fail(errc::parse, "metric g row length mismatch");
      for (size_t c = 0; c < dim; ++c) m.g.at(r, c) = poly_from_json(rows[r][c], dim);
    }
  } else {
    m.g = PolyMatrix::identity(dim, dim);
  }
  if (j.contains("h")) m.h = poly_from_json(j["h"], dim);
  if (j.contains("transform")) m.transform = bba_from_json(j["transform"], dim);
  if (j.contains("sample_points")) {
    for (const auto& p : j["sample_points"]) {
      std::vector<Rational> pt;
      for (const auto& r : p)
        pt.push_back(r.is_number_integer() ? Rational(r.get<long long>())
                                           : rational_from_string(r.get<std::string>()));
      m.sample_points.push_back(std::move(pt));
    }
  }
  return m;
}

Json to_json(const CechDatum& cd) {
  Json j;
  j["patches"] = cd.patches;
  Json data;
  for (const auto& [name, t] : cd.data) data[name] = to_json(t);
  j["data"] = data;
  return j;
}

CechDatum cech_from_json(const Json& j, unsigned dim) {
  CechDatum cd;
  if (j.contains("patches")) cd.patches = j["patches"].get<std::vector<std::string>>();
  if (j.contains("data"))
    for (const auto& [name, val] : j["data"].items()) cd.data.emplace(name, bba_from_json(val, dim));
  if (cd.patches.empty())
    for (const auto& [name, t] : cd.data) cd.patches.push_back(name);
  return cd;
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& e : r.entries()) {
    Json c;
    c["name"] = e.name;
    c["status"] = to_string(e.status);
    if (e.residual) c["residual"] = *e.residual;
    c["notes"] = e.notes;
    checks.push_back(c);
  }
  Json out;
  out["checks"] = checks;
  return out;
}

}  // namespace gcgeo
