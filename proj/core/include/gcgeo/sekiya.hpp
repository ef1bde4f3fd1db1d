#pragma once

#include "gcgeo/transforms.hpp"

namespace gcgeo {

// (Phi, e1, e2, lambda, mu): Phi is a 2n x 2n Poly matrix on the ordered frame
// [X_1..X_n, xi_1..xi_n] of TM + T*M.
struct SekiyaQuadruple {
  PolyMatrix Phi;
  GenSection e1;
  GenSection e2;
  Scalar lambda;
  Scalar mu{1};

  explicit SekiyaQuadruple(unsigned dim)
      : Phi(2 * dim, dim), e1(dim), e2(dim) {}
  unsigned dim() const { return e1.dim(); }
};

// Pairing Gram matrices (both symmetric, entries 0 and 1/2).
ScalarMatrix pairing_matrix_tm(unsigned dim);
ScalarMatrix pairing_matrix_contact(unsigned dim);

std::vector<Poly> apply_endo_tm(const PolyMatrix& endo, const GenSection& s);
GenSection endo_apply(const PolyMatrix& endo, const GenSection& s);

// All four Sekiya axiom groups, exactly.
Report validate_sekiya(const FrameAlgebra& frame, const SekiyaQuadruple& q);

// The (2n+2)-endomorphism
//   [ Phi        mu e1   mu e2 ]
//   [ -2mu<e2,.>  -lambda  0   ]
//   [ -2mu<e1,.>  0   lambda   ]
// on the ordered frame [X.., f, g, xi..]; squares to -id iff q validates.
PolyMatrix assemble_jinv(const FrameAlgebra& frame, const SekiyaQuadruple& q,
                         bool validate = true);

// Does J have the invariant shape above? Extracts (lambda, mu*e1, mu*e2, Phi).
struct JinvShape {
  bool ok = false;
  std::string why;
  Scalar lambda;
  GenSection mu_e1;
  GenSection mu_e2;
  PolyMatrix Phi;
};
JinvShape extract_jinv_shape(const FrameAlgebra& frame, const PolyMatrix& J);

struct SekiyaTransformResult {
  SekiyaQuadruple quadruple;       // conjugation-derived (authoritative)
  PolyMatrix conjugated;           // e^t J e^{-t}
  PolyMatrix literal;              // assembled from the published formulas
  PolyMatrix literal_residual;     // conjugated - literal
  Scalar lambda_literal;
};

// Deform a Sekiya quadruple by e^{(B,b,a)}. The conjugation of assemble_jinv
// is authoritative; the published component formulas are evaluated alongside
// and their residual is reported, never silently resolved. Throws
// errc::unrepresentable when 1 + lambda'^2 has no rational square root.
SekiyaTransformResult transform_sekiya(const FrameAlgebra& frame, const BbaTransform& t,
                                       const SekiyaQuadruple& q);

// The published component formulas, verbatim.
struct SeksymmLiteral {
  PolyMatrix Phi;
  GenSection mu_e1;
  GenSection mu_e2;
  Scalar lambda;
};
SeksymmLiteral seksymm_literal(const FrameAlgebra& frame, const BbaTransform& t,
                               const SekiyaQuadruple& q);

// Swap e1 <-> e2 and flip lambda: same structure, used by circle T-duality.
SekiyaQuadruple sekiya_swap(const SekiyaQuadruple& q);

}  // namespace gcgeo
