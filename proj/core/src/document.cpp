#include "gcgeo/document.hpp"

#include "gcgeo/error.hpp"

#include <fstream>

namespace gcgeo {

Document Document::from_json(const Json& j) {
  Document doc;
  if (!j.contains("frame")) fail(errc::input, "document needs a \"frame\"");
  doc.frame = frame_from_json(j["frame"]);
  unsigned dim = doc.frame.dim();

  auto each = [&](const char* key, auto fn) {
    if (!j.contains(key)) return;
    for (const auto& [name, val] : j[key].items()) fn(name, val);
  };
  each("forms", [&](const std::string& n, const Json& v) {
    doc.forms.emplace(n, polyform_from_json(v, dim));
  });
  each("gen_sections", [&](const std::string& n, const Json& v) {
    doc.gen_sections.emplace(n, gen_section_from_json(v, dim));
  });
  each("sections", [&](const std::string& n, const Json& v) {
    doc.sections.emplace(n, contact_section_from_json(v, dim));
  });
  each("twists", [&](const std::string& n, const Json& v) {
    doc.twists.emplace(n, twists_from_json(v, dim));
  });
  each("pairs", [&](const std::string& n, const Json& v) {
    doc.pairs.emplace(n, mixed_pair_from_json(v, dim));
  });
  each("form_pairs", [&](const std::string& n, const Json& v) {
    if (!v.is_array() || v.size() != 2)
      fail(errc::parse, "form_pair '" + n + "' must be [Polyform, Polyform]");
    doc.form_pairs.emplace(n, FormPair{polyform_from_json(v[0], dim),
                                       polyform_from_json(v[1], dim)});
  });
  each("quadruples", [&](const std::string& n, const Json& v) {
    doc.quadruples.emplace(n, sekiya_from_json(v, dim));
  });
  each("metrics", [&](const std::string& n, const Json& v) {
    doc.metrics.emplace(n, metric_from_json(v, dim));
  });
  each("transforms", [&](const std::string& n, const Json& v) {
    doc.transforms.emplace(n, bba_from_json(v, dim));
  });
  each("cech", [&](const std::string& n, const Json& v) {
    doc.cech.emplace(n, cech_from_json(v, dim));
  });
  if (j.contains("sample_points")) {
    for (const auto& p : j["sample_points"]) {
      std::vector<Rational> pt;
      for (const auto& r : p)
        pt.push_back(r.is_number_integer() ? Rational(r.get<long long>())
                                           : rational_from_string(r.get<std::string>()));
      if (pt.size() != dim) fail(errc::input, "sample point dimension mismatch");
      doc.sample_points.push_back(std::move(pt));
    }
  }

  // Mode legality of every loaded object.
  for (const auto& [n, f] : doc.forms) doc.frame.require_legal(f, "form '" + n + "'");
  for (const auto& [n, s] : doc.gen_sections) {
    doc.frame.require_legal(s.X, "gen_section '" + n + "'");
    doc.frame.require_legal(s.xi, "gen_section '" + n + "'");
  }
  for (const auto& [n, s] : doc.sections) {
    doc.frame.require_legal(s.X, "section '" + n + "'");
    doc.frame.require_legal(s.f, "section '" + n + "'");
    doc.frame.require_legal(s.g, "section '" + n + "'");
    doc.frame.require_legal(s.xi, "section '" + n + "'");
  }
  for (const auto& [n, t] : doc.twists) {
    doc.frame.require_legal(t.H3, "twists '" + n + "'");
    doc.frame.require_legal(t.H2, "twists '" + n + "'");
    doc.frame.require_legal(t.F, "twists '" + n + "'");
  }
  for (const auto& [n, t] : doc.transforms) require_bba(doc.frame, t);
  return doc;
}

Document Document::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::input, "cannot open document '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(errc::parse, "document '" + path + "': " + e.what());
  }
  return from_json(j);
}

namespace {

template <typename M>
const typename M::mapped_type& find_or_fail(const M& map, const std::string& name,
                                            const char* what) {
  auto it = map.find(name);
  if (it == map.end())
    fail(errc::input, std::string("unknown ") + what + " '" + name + "'");
  return it->second;
}

}  // namespace

const Twists& Document::twists_or_fail(const std::string& name) const {
  return find_or_fail(twists, name, "twists");
}
const MixedPair& Document::pair_or_fail(const std::string& name) const {
  return find_or_fail(pairs, name, "pair");
}
const BbaTransform& Document::transform_or_fail(const std::string& name) const {
  return find_or_fail(transforms, name, "transform");
}
const SekiyaQuadruple& Document::quadruple_or_fail(const std::string& name) const {
  return find_or_fail(quadruples, name, "quadruple");
}
const GenContactMetric& Document::metric_or_fail(const std::string& name) const {
  return find_or_fail(metrics, name, "metric");
}
const CechDatum& Document::cech_or_fail(const std::string& name) const {
  return find_or_fail(cech, name, "cech datum");
}
const FormPair& Document::form_pair_or_fail(const std::string& name) const {
  return find_or_fail(form_pairs, name, "form pair");
}

}  // namespace gcgeo
