#include "gcgeo/polyform.hpp"

#include "gcgeo/error.hpp"

#include <sstream>

namespace gcgeo {

namespace blade {

std::vector<unsigned> indices(Mask m) {
  std::vector<unsigned> idx;
  for (unsigned k = 1; m != 0; ++k, m >>= 1)
    if (m & 1u) idx.push_back(k);
  return idx;
}

Mask from_indices(const std::vector<unsigned>& idx, unsigned dim) {
  Mask m = 0;
  unsigned prev = 0;
  for (unsigned k : idx) {
    if (k == 0 || k > dim) fail(errc::input, "blade index out of range 1..n");
    if (k <= prev) fail(errc::input, "blade indices must be strictly ascending");
    prev = k;
    m |= Mask(1) << (k - 1);
  }
  return m;
}

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Count inversions: pairs (i in a, j in b) with i > j.
  int inversions = 0;
  for (Mask bb = b; bb != 0; bb &= bb - 1) {
    Mask lowest = bb & -bb;
    Mask above = a & ~(lowest | (lowest - 1));
    inversions += __builtin_popcountll(above);
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

int contract_sign(Mask m, unsigned k) {
  Mask below = m & ((Mask(1) << (k - 1)) - 1);
  return (__builtin_popcountll(below) % 2 == 0) ? 1 : -1;
}

std::string str(Mask m) {
  if (m == 0) return "1";
  std::string s = "e";
  for (unsigned k : indices(m)) {
    if (s.size() > 1) s += ".";
    s += std::to_string(k);
  }
  return s;
}

}  // namespace blade

Polyform Polyform::scalar(unsigned dim, const Scalar& c) {
  return scalar(dim, Poly(dim, c));
}

Polyform Polyform::scalar(unsigned dim, const Poly& p) {
  Polyform f(dim);
  if (!p.is_zero()) f.terms_[0] = p;
  return f;
}

Polyform Polyform::generator(unsigned dim, unsigned k) {
  return monomial(dim, {k}, Scalar(1));
}

Polyform Polyform::monomial(unsigned dim, const std::vector<unsigned>& idx, const Scalar& c) {
  Polyform f(dim);
  if (!c.is_zero()) f.terms_[blade::from_indices(idx, dim)] = Poly(dim, c);
  return f;
}

unsigned Polyform::max_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, blade::degree(m));
  return d;
}

bool Polyform::is_homogeneous(unsigned k) const {
  for (const auto& [m, c] : terms_)
    if (blade::degree(m) != k) return false;
  return true;
}

Parity Polyform::parity() const {
  bool even = false, odd = false;
  for (const auto& [m, c] : terms_)
    (blade::degree(m) % 2 == 0 ? even : odd) = true;
  if (even && odd) return Parity::mixed;
  if (odd) return Parity::odd;
  return Parity::even;  // zero counts as even
}

Poly Polyform::coefficient(blade::Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Poly(dim_) : it->second;
}

void Polyform::add_term(blade::Mask m, const Poly& c) {
  if (c.is_zero()) return;
  if (blade::degree(m) > dim_) fail(errc::input, "blade degree exceeds frame dimension");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polyform Polyform::operator-() const {
  Polyform r(dim_);
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Polyform& Polyform::operator+=(const Polyform& o) {
  if (dim_ != o.dim_) fail(errc::input, "Polyform frame dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polyform& Polyform::operator-=(const Polyform& o) {
  if (dim_ != o.dim_) fail(errc::input, "Polyform frame dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polyform operator*(const Polyform& a, const Scalar& c) {
  Polyform r(a.dim_);
  if (c.is_zero()) return r;
  for (const auto& [m, p] : a.terms_) r.terms_[m] = p * c;
  return r;
}

Polyform operator*(const Polyform& a, const Poly& c) {
  Polyform r(a.dim_);
  for (const auto& [m, p] : a.terms_) r.add_term(m, p * c);
  return r;
}

Polyform Polyform::conj() const {
  Polyform r(dim_);
  for (const auto& [m, c] : terms_) r.terms_[m] = c.conj();
  return r;
}

Polyform Polyform::project_degree(unsigned k) const {
  Polyform r(dim_);
  for (const auto& [m, c] : terms_)
    if (blade::degree(m) == k) r.terms_[m] = c;
  return r;
}

Polyform Polyform::reversal() const {
  Polyform r(dim_);
  for (const auto& [m, c] : terms_) {
    unsigned k = blade::degree(m);
    bool flip = (k * (k - 1) / 2) % 2 == 1;
    r.terms_[m] = flip ? -c : c;
  }
  return r;
}

std::string Polyform::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.str() << "]" << (m == 0 ? "" : "*" + blade::str(m));
  }
  return os.str();
}

Polyform wedge(const Polyform& a, const Polyform& b) {
  if (a.dim() != b.dim()) fail(errc::input, "wedge of forms over different frames");
  Polyform r(a.dim());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int sign = blade::wedge_sign(ma, mb);
      if (sign == 0) continue;
      Poly c = ca * cb;
      if (sign < 0) c = -c;
      r.add_term(ma | mb, c);
    }
  return r;
}

Polyform contract(const VectorField& v, const Polyform& a) {
  if (v.dim() != a.dim()) fail(errc::input, "contraction dimension mismatch");
  Polyform r(a.dim());
  for (unsigned k = 1; k <= v.dim(); ++k) {
    const Poly& comp = v[k - 1];
    if (comp.is_zero()) continue;
    blade::Mask bit = blade::Mask(1) << (k - 1);
    for (const auto& [m, c] : a.terms()) {
      if (!(m & bit)) continue;
      Poly coeff = c * comp;
      if (blade::contract_sign(m, k) < 0) coeff = -coeff;
      r.add_term(m & ~bit, coeff);
    }
  }
  return r;
}

Polyform exp(const Polyform& a) {
  if (!a.coefficient(0).is_zero())
    fail(errc::input, "exp requires a form with no degree-0 part");
  Polyform acc = Polyform::scalar(a.dim(), Scalar(1));
  Polyform power = acc;
  Rational factorial(1);
  for (unsigned k = 1; k <= a.dim(); ++k) {
    power = wedge(power, a);
    if (power.is_zero()) break;
    factorial *= k;
    acc += power * Scalar(Rational(1) / factorial);
  }
  return acc;
}

VectorField VectorField::basis(unsigned dim, unsigned k) {
  if (k == 0 || k > dim) fail(errc::input, "basis vector index out of range");
  VectorField v(dim);
  v[k - 1] = Poly(dim, Scalar(1));
  return v;
}

bool VectorField::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

VectorField VectorField::operator-() const {
  VectorField r = *this;
  for (auto& c : r.comps_) c = -c;
  return r;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (dim() != o.dim()) fail(errc::input, "vector dimension mismatch");
  for (unsigned i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

VectorField operator-(VectorField a, const VectorField& b) {
  a += -b;
  return a;
}

VectorField operator*(const VectorField& a, const Poly& c) {
  VectorField r = a;
  for (unsigned i = 0; i < r.dim(); ++i) r[i] = r[i] * c;
  return r;
}

VectorField operator*(const VectorField& a, const Scalar& c) {
  VectorField r = a;
  for (unsigned i = 0; i < r.dim(); ++i) r[i] = r[i] * c;
  return r;
}

VectorField VectorField::conj() const {
  VectorField r = *this;
  for (auto& c : r.comps_) c = c.conj();
  return r;
}

}  // namespace gcgeo
