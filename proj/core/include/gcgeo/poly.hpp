#pragma once

#include "gcgeo/scalar.hpp"

#include <map>
#include <vector>

namespace gcgeo {

// Sparse multivariate polynomial in the formal coordinates x_1..x_n attached
// to the frame generators. Zero-coefficient monomials are never stored.
class Poly {
public:
  using Exponents = std::vector<unsigned>;

  Poly() = default;
  explicit Poly(unsigned nvars) : nvars_(nvars) {}
  Poly(unsigned nvars, const Scalar& c) : nvars_(nvars) {
    if (!c.is_zero()) terms_[Exponents(nvars, 0)] = c;
  }

  static Poly constant(unsigned nvars, const Scalar& c) { return Poly(nvars, c); }
  static Poly variable(unsigned nvars, unsigned i);  // x_{i+1}

  unsigned nvars() const { return nvars_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_value() const;  // 0 if no constant term; requires is_constant() for exactness
  unsigned total_degree() const;

  void add_term(const Exponents& e, const Scalar& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Scalar& c);
  friend Poly operator*(const Scalar& c, const Poly& a) { return a * c; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly conj() const;
  Poly derivative(unsigned i) const;                 // d/dx_{i+1}
  Scalar eval(const std::vector<Scalar>& point) const;
  Poly extend_vars(unsigned new_nvars) const;        // pad exponent vectors
  Poly shift_vars(unsigned new_nvars, unsigned offset) const;

  std::string str() const;

private:
  unsigned nvars_ = 0;
  std::map<Exponents, Scalar> terms_;
};

}  // namespace gcgeo
