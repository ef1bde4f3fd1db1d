#pragma once

#include "gcgeo/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace gcgeo {

// Basis blades are bitmasks over frame indices 1..n (bit k-1 <-> epsilon_k).
namespace blade {

using Mask = std::uint64_t;

inline unsigned degree(Mask m) { return static_cast<unsigned>(__builtin_popcountll(m)); }

std::vector<unsigned> indices(Mask m);          // ascending 1-based
Mask from_indices(const std::vector<unsigned>& idx, unsigned dim);

// Sign of epsilon_A ^ epsilon_B relative to the sorted blade A|B; 0 if A and B
// overlap.
int wedge_sign(Mask a, Mask b);

// Sign picked up contracting e_k into the blade (k must be present).
int contract_sign(Mask m, unsigned k);

std::string str(Mask m);

}  // namespace blade

enum class Parity { even, odd, mixed };

class FrameAlgebra;
class VectorField;

// Inhomogeneous differential form: sparse map blade -> Poly coefficient.
class Polyform {
public:
  Polyform() = default;
  explicit Polyform(unsigned dim) : dim_(dim) {}

  static Polyform zero(unsigned dim) { return Polyform(dim); }
  static Polyform scalar(unsigned dim, const Scalar& c);
  static Polyform scalar(unsigned dim, const Poly& p);
  static Polyform generator(unsigned dim, unsigned k);  // epsilon_k
  static Polyform monomial(unsigned dim, const std::vector<unsigned>& idx, const Scalar& c);

  unsigned dim() const { return dim_; }
  const std::map<blade::Mask, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned max_degree() const;
  bool is_homogeneous(unsigned k) const;
  Parity parity() const;

  Poly coefficient(blade::Mask m) const;
  void add_term(blade::Mask m, const Poly& c);

  Polyform operator-() const;
  Polyform& operator+=(const Polyform& o);
  Polyform& operator-=(const Polyform& o);
  friend Polyform operator+(Polyform a, const Polyform& b) { a += b; return a; }
  friend Polyform operator-(Polyform a, const Polyform& b) { a -= b; return a; }
  friend Polyform operator*(const Polyform& a, const Scalar& c);
  friend Polyform operator*(const Scalar& c, const Polyform& a) { return a * c; }
  friend Polyform operator*(const Polyform& a, const Poly& c);
  friend Polyform operator*(const Poly& c, const Polyform& a) { return a * c; }
  friend bool operator==(const Polyform& a, const Polyform& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polyform& a, const Polyform& b) { return !(a == b); }

  Polyform conj() const;
  Polyform project_degree(unsigned k) const;
  Polyform reversal() const;  // alpha: degree k scaled by (-1)^{k(k-1)/2}

  std::string str() const;

private:
  unsigned dim_ = 0;
  std::map<blade::Mask, Poly> terms_;
};

Polyform wedge(const Polyform& a, const Polyform& b);

// Interior product iota_v; v may have Poly components.
Polyform contract(const VectorField& v, const Polyform& a);

// Eager exponential; the argument must have no degree-0 component.
Polyform exp(const Polyform& a);

// Components of a vector field in the frame e_1..e_n.
class VectorField {
public:
  VectorField() = default;
  explicit VectorField(unsigned dim) : comps_(dim) {
    for (auto& c : comps_) c = Poly(dim);
  }
  VectorField(unsigned dim, std::vector<Poly> comps) : comps_(std::move(comps)) {
    (void)dim;
  }

  static VectorField basis(unsigned dim, unsigned k);  // e_k, 1-based

  unsigned dim() const { return static_cast<unsigned>(comps_.size()); }
  const Poly& operator[](unsigned i) const { return comps_[i]; }
  Poly& operator[](unsigned i) { return comps_[i]; }
  bool is_zero() const;

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& o);
  friend VectorField operator+(VectorField a, const VectorField& b) { a += b; return a; }
  friend VectorField operator-(VectorField a, const VectorField& b);
  friend VectorField operator*(const VectorField& a, const Poly& c);
  friend VectorField operator*(const VectorField& a, const Scalar& c);
  friend bool operator==(const VectorField& a, const VectorField& b) { return a.comps_ == b.comps_; }
  friend bool operator!=(const VectorField& a, const VectorField& b) { return !(a == b); }

  VectorField conj() const;

private:
  std::vector<Poly> comps_;
};

}  // namespace gcgeo
