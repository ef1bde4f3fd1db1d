#pragma once

#include "gcgeo/metric.hpp"

namespace gcgeo {

// iota_{e_i} iota_{e_j} H = 0 for all fiber pairs; k <= 1 is vacuous.
Report check_admissible(const FrameAlgebra& frame, const Polyform& H,
                        const std::vector<unsigned>& fiber_indices);

struct TDualityResult {
  MixedPair pair;
  Twists twists;
  Polyform connection;        // role-swapped connections
  Polyform dual_connection;
  Report report;
};

// Circle T-duality at the invariant level: (phi,psi) -> (psi,phi) with
// e1 <-> e2, lambda -> -lambda, twists (H3,H2,F) -> (H3,F,H2), connection
// roles A <-> A~. Applying it twice is the identity.
TDualityResult t_dualize_circle(const FrameAlgebra& frame, const MixedPair& mp,
                                const Twists& tw, const Polyform& A, const Polyform& A_tilde,
                                unsigned witness_degree_bound = 1);

// Exact ratio c with M(p2) = c * M(p1) for the Mukai pairings of two form
// pairs; nullopt when the top forms are not proportional by a real constant.
std::optional<Scalar> check_einstein_pairing(const FrameAlgebra& frame, const FormPair& p1,
                                             const FormPair& p2);

// Same ratio on the self-pairings of two mixed pairs.
std::optional<Scalar> check_einstein_pairing_mixed(const FrameAlgebra& frame, const MixedPair& p1,
                                                   const MixedPair& p2);

// (phi1^phi2, psi1^phi2, lifted e1, e2) on the direct-sum frame.
struct ProductLift {
  FrameAlgebra frame;
  MixedPair pair;
  Report report;
};
ProductLift lift_product(const FrameAlgebra& contact_frame, const MixedPair& mp,
                         const FrameAlgebra& spinor_frame, const Polyform& spinor);

}  // namespace gcgeo
