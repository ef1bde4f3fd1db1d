#pragma once

#include "gcgeo/linalg.hpp"
#include "gcgeo/sections.hpp"

#include <optional>
#include <utility>

namespace gcgeo {

using FormPair = std::pair<Polyform, Polyform>;

inline FormPair conj(const FormPair& p) { return {p.first.conj(), p.second.conj()}; }

// (X,xi) . phi = iota_X phi + xi ^ phi
Polyform clifford_tm(const GenSection& s, const Polyform& a);

// (X,f,g,xi) . (phi,psi) = ((X,xi).phi + f psi, g phi - (X,xi).psi)
FormPair clifford_contact(const ContactSection& s, const FormPair& p);

// Mukai pairing: degree-m component of alpha(a) ^ b.
Polyform mukai(const Polyform& a, const Polyform& b);

// Pairing of pairs: (-1)^{|phi1|}(alpha(phi1)^psi2)_m + (-1)^{|psi1|}(alpha(psi1)^phi2)_m,
// signs applied per homogeneous component, projected to top degree m.
Polyform mukai_mixed(const FormPair& p1, const FormPair& p2);

// Self-conjugate pairing through the circle lift phi + i*A^psi: the top-degree
// reduction of the Mukai square upstairs. This is the nondegeneracy quantity
// for mixed pairs; it does not vanish on (p, conj p) the way the bilinear
// pairing does. Degree convention: m.
Polyform mukai_mixed_self(const FormPair& p);

// Section <-> coordinate vector over the ordered frame
// [X_1..X_n, f, g, xi_1..xi_n] (contact) or [X_1..X_n, xi_1..xi_n] (TM).
std::vector<Poly> section_coords(const ContactSection& s);
ContactSection section_from_coords(unsigned dim, const std::vector<Poly>& v);
std::vector<Poly> section_coords_tm(const GenSection& s);
GenSection section_from_coords_tm(unsigned dim, const std::vector<Scalar>& v);
ContactSection section_from_scalars(unsigned dim, const std::vector<Scalar>& v);

struct AnnihilatorResult {
  // Basis vectors in section coordinates; global when the pair has constant
  // coefficients, otherwise per sample point.
  std::vector<std::vector<Scalar>> basis;
  size_t complex_dim = 0;
  size_t real_dim = 0;  // of the complex kernel viewed over R
  bool global = false;
  std::vector<Scalar> point;  // empty when global
};

// Exact kernel of s -> s.(phi,psi) over the (2n+2)-dimensional section space.
std::vector<AnnihilatorResult> annihilator(const FrameAlgebra& frame, const FormPair& p,
                                           const std::vector<std::vector<Rational>>& sample_points);
// Even-dimensional analogue on TM + T*M.
std::vector<AnnihilatorResult> annihilator_tm(const FrameAlgebra& frame, const Polyform& phi,
                                              const std::vector<std::vector<Rational>>& sample_points);

// codim_C of the tangent projection of the annihilator at the point.
unsigned geometric_type(const FrameAlgebra& frame, const FormPair& p,
                        const std::vector<Rational>& point);
unsigned geometric_type_tm(const FrameAlgebra& frame, const Polyform& phi,
                           const std::vector<Rational>& point);

// v1.phi = psi and v2.psi = phi, solved with Poly coefficients of bounded degree.
struct DiracRelators {
  GenSection v1;
  GenSection v2;
};
std::optional<DiracRelators> solve_dirac_relators(const FrameAlgebra& frame, const FormPair& p,
                                                  unsigned degree_bound = 1);

struct MixedPair {
  Polyform phi;
  Polyform psi;
  GenSection e1;
  GenSection e2;
  Scalar lambda;
  Scalar mu{1};

  explicit MixedPair(unsigned dim) : phi(dim), psi(dim), e1(dim), e2(dim) {}
  FormPair pair() const { return {phi, psi}; }
  unsigned dim() const { return phi.dim(); }
};

// Compatibility identities, pairing normalisation, Pythagorean constraint and
// combined nondegeneracy; individual degree-(m-1) projections are reported and
// enforced only under strict_pair_nondegeneracy.
Report validate_mixed_pair(const FrameAlgebra& frame, const MixedPair& mp,
                           bool strict_pair_nondegeneracy = false);

// d_{H3,H2,F}(phi,psi) = (d phi + H3^phi + F^psi, H2^phi - d psi - H3^psi)
FormPair twisted_differential(const FrameAlgebra& frame, const FormPair& p, const Twists& t,
                              bool check_mc = true);

// Oracle: d_H(phi + A^psi) on the circle extension, reduced back.
FormPair reduce_differential_oracle(const FrameAlgebra& frame, const Polyform& conn_curvature,
                                    const Polyform& H3, const Polyform& H2, const FormPair& p);

// Exact witness V with d_{H3,H2,F}(phi,psi) = V.(phi,psi), Poly coefficients of
// total degree <= degree_bound; nullopt when no witness exists.
std::optional<ContactSection> solve_involutive(const FrameAlgebra& frame, const FormPair& p,
                                               const Twists& t, unsigned degree_bound);
std::optional<GenSection> solve_involutive_spinor(const FrameAlgebra& frame, const Polyform& phi,
                                                  const Polyform& H, unsigned degree_bound);

// (i) the product identity (X1 o X2).(phi,psi) = -X2.X1.d(phi,psi) on all
// pairs from the annihilator basis, and (ii) bracket closure of the basis.
Report check_annihilator_involutive(const FrameAlgebra& frame, const MixedPair& mp,
                                    const Twists& t);

// Global annihilator basis as constant sections (constant-coefficient pairs).
std::vector<ContactSection> annihilator_basis_global(const FrameAlgebra& frame, const FormPair& p);

}  // namespace gcgeo
