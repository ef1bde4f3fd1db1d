#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace gcgeo {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact square root of a non-negative rational, if one exists in Q.
std::optional<Rational> exact_sqrt(const Rational& x);

std::string rational_to_string(const Rational& x);
Rational rational_from_string(const std::string& s);

// Gaussian rational: re + im*i with exact rational parts.
struct Scalar {
  Rational re{0};
  Rational im{0};

  Scalar() = default;
  Scalar(long v) : re(v) {}
  Scalar(Rational r) : re(std::move(r)) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  Scalar conj() const { return Scalar(re, -im); }
  Rational norm2() const { return re * re + im * im; }

  Scalar operator-() const { return Scalar(-re, -im); }
  Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
  Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }

  friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
  friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    return Scalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  Scalar inverse() const;
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

// Canonical text encoding: "p/q", "r/s*i", or "p/q+r/s*i" (denominator 1 omitted).
std::string to_string(const Scalar& s);
Scalar scalar_from_string(const std::string& text);

}  // namespace gcgeo
