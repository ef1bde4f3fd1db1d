#include "gcgeo/poly.hpp"

#include "gcgeo/error.hpp"

#include <numeric>
#include <sstream>

namespace gcgeo {

Poly Poly::variable(unsigned nvars, unsigned i) {
  if (i >= nvars) fail(errc::input, "variable index out of range");
  Poly p(nvars);
  Exponents e(nvars, 0);
  e[i] = 1;
  p.terms_[e] = Scalar(1);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0));
}

Scalar Poly::constant_value() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Scalar() : it->second;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

void Poly::add_term(const Exponents& e, const Scalar& c) {
  if (e.size() != nvars_) fail(errc::input, "exponent vector length mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_[e] = c;
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) fail(errc::input, "Poly variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) fail(errc::input, "Poly variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) fail(errc::input, "Poly variable count mismatch");
  Poly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Poly::Exponents e(a.nvars_);
      for (unsigned i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly operator*(const Poly& a, const Scalar& c) {
  Poly r(a.nvars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : a.terms_) r.terms_[e] = v * c;
  return r;
}

Poly Poly::conj() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = c.conj();
  return r;
}

Poly Poly::derivative(unsigned i) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents de = e;
    de[i] -= 1;
    r.add_term(de, c * Scalar(Rational(e[i])));
  }
  return r;
}

Scalar Poly::eval(const std::vector<Scalar>& point) const {
  if (point.size() != nvars_) fail(errc::input, "evaluation point dimension mismatch");
  Scalar acc;
  for (const auto& [e, c] : terms_) {
    Scalar m = c;
    for (unsigned i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) m = m * point[i];
    acc += m;
  }
  return acc;
}

Poly Poly::extend_vars(unsigned new_nvars) const { return shift_vars(new_nvars, 0); }

Poly Poly::shift_vars(unsigned new_nvars, unsigned offset) const {
  Poly r(new_nvars);
  for (const auto& [e, c] : terms_) {
    Exponents ne(new_nvars, 0);
    for (unsigned i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (i + offset >= new_nvars) fail(errc::input, "variable shift out of range");
      ne[i + offset] = e[i];
    }
    r.terms_[ne] = c;
  }
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    for (unsigned i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << "*x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace gcgeo
