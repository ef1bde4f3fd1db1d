#pragma once

#include "gcgeo/polyform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gcgeo {

enum class FrameMode { coordinate, invariant };

// The ambient "manifold at desk scale": a frame epsilon_1..epsilon_n with a
// differential d given either by formal coordinates (d eps_k = 0, coefficients
// may depend on x_k) or by constant structure 2-forms d eps_k. Circle
// extensions of a coordinate frame mix the two kinds per generator.
class FrameAlgebra {
public:
  static FrameAlgebra coordinate(unsigned dim);
  static FrameAlgebra invariant(unsigned dim, std::vector<Polyform> d_gen);

  unsigned dim() const { return dim_; }
  FrameMode mode() const;
  bool is_coordinate_generator(unsigned k) const { return coordinate_[k - 1]; }
  bool is_pure_coordinate() const;
  bool is_pure_invariant() const;

  // d eps_k (zero for coordinate generators).
  const Polyform& d_generator(unsigned k) const { return d_gen_[k - 1]; }

  // Coefficients may only involve variables of coordinate generators.
  bool coefficient_legal(const Poly& p) const;
  void require_legal(const Poly& p, const std::string& where) const;
  void require_legal(const Polyform& f, const std::string& where) const;
  void require_legal(const VectorField& v, const std::string& where) const;

  Polyform d(const Polyform& a) const;
  VectorField lie_bracket(const VectorField& x, const VectorField& y) const;
  Polyform lie_derivative(const VectorField& x, const Polyform& a) const;
  Poly apply_vector(const VectorField& x, const Poly& f) const;  // X(f)

  // Adds generator eps_{n+1} with d eps_{n+1} = F (F must be closed).
  FrameAlgebra extend_circle(const Polyform& F) const;
  Polyform lift_form(const Polyform& base_form) const;  // into this extended frame
  Poly lift_poly(const Poly& base_poly) const;
  VectorField lift_vector(const VectorField& base_vec) const;

  // Block direct sum; coordinate/invariant flags carried per generator.
  static FrameAlgebra direct_sum(const FrameAlgebra& a, const FrameAlgebra& b);

  friend bool operator==(const FrameAlgebra& a, const FrameAlgebra& b) {
    return a.dim_ == b.dim_ && a.coordinate_ == b.coordinate_ && a.d_gen_ == b.d_gen_;
  }

private:
  FrameAlgebra() = default;
  unsigned dim_ = 0;
  std::vector<bool> coordinate_;
  std::vector<Polyform> d_gen_;
};

// Nilmanifold structure-constant notation, e.g. "(0,0,12,13,14+23,34+52)".
// Tokens "ij" (dim <= 9) or "i.j" with optional signs; entry k gives d eps_k.
FrameAlgebra parse_nil(const std::string& spec,
                       std::optional<unsigned> frame_dim_hint = std::nullopt);

// Canonical round-trip string: terms sorted by blade, coefficients +-1 only.
std::string nil_string(const FrameAlgebra& frame);

struct FrameCheck {
  unsigned generator = 0;
  bool ok = true;
  Polyform residual;  // d(d eps_k) when nonzero
};

// PASS iff d(d eps_k) = 0 for every generator.
std::vector<FrameCheck> validate_frame(const FrameAlgebra& frame);
bool frame_ok(const std::vector<FrameCheck>& checks);

}  // namespace gcgeo
