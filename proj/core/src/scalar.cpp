#include "gcgeo/scalar.hpp"

#include "gcgeo/error.hpp"

#include <cctype>

namespace gcgeo {

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  Integer num = boost::multiprecision::numerator(x);
  Integer den = boost::multiprecision::denominator(x);
  Integer rn = boost::multiprecision::sqrt(num);
  Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

std::string rational_to_string(const Rational& x) {
  Integer num = boost::multiprecision::numerator(x);
  Integer den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) fail(errc::parse, "zero denominator in rational '" + s + "'");
    return Rational(num, den);
  } catch (const gc_error&) {
    throw;
  } catch (const std::exception&) {
    fail(errc::parse, "malformed rational '" + s + "'");
  }
}

Scalar Scalar::inverse() const {
  Rational n = norm2();
  if (n == 0) fail(errc::input, "division by zero Scalar");
  return Scalar(re / n, -im / n);
}

std::string to_string(const Scalar& s) {
  if (s.im == 0) return rational_to_string(s.re);
  std::string imag = (s.im < 0 ? "-" : "") + rational_to_string(boost::multiprecision::abs(s.im)) + "*i";
  if (s.re == 0) return imag;
  if (s.im < 0) return rational_to_string(s.re) + imag;
  return rational_to_string(s.re) + "+" + imag;
}

namespace {

// Splits "p/q+r/s*i" into its real and imaginary summands at the top-level +/-.
// A sign directly after the start or after '/' digits is a separator only when
// a previous term has been consumed.
std::vector<std::string> split_terms(const std::string& text) {
  std::vector<std::string> terms;
  std::string cur;
  for (size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if ((c == '+' || c == '-') && !cur.empty()) {
      terms.push_back(cur);
      cur.clear();
      if (c == '-') cur.push_back('-');
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) terms.push_back(cur);
  return terms;
}

}  // namespace

Scalar scalar_from_string(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(errc::parse, "empty scalar");

  Scalar out;
  for (const std::string& term : split_terms(s)) {
    bool imag = false;
    std::string body = term;
    if (body.size() >= 2 && body.substr(body.size() - 2) == "*i") {
      imag = true;
      body = body.substr(0, body.size() - 2);
    } else if (!body.empty() && body.back() == 'i') {
      imag = true;
      body.pop_back();
      if (body.empty() || body == "-" || body == "+") body += "1";
    }
    if (body.empty()) fail(errc::parse, "malformed scalar '" + text + "'");
    Rational v = rational_from_string(body);
    if (imag)
      out.im += v;
    else
      out.re += v;
  }
  return out;
}

}  // namespace gcgeo
