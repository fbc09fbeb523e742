#pragma once

#include <vector>

#include "hitprob/gf2.hpp"
#include "hitprob/hitsolver.hpp"

namespace hitprob {

enum class BasisPart { All, Zero, Plus };

// The matrices of the induced GL_n generators on the classes of an admissible
// basis: column b of generators[j-1] holds the coordinates of rho_j(b).
struct InducedAction {
    AdmissibleBasis basis;
    std::vector<gf2::BitMatrix> generators;
};

gf2::BitMatrix induced_action(Solver& solver, const AdmissibleBasis& basis, int j);
InducedAction induced_actions(Solver& solver, const AdmissibleBasis& basis);

// Fixed classes of the subgroup generated by rho_1..rho_{n-1} (sigma) or by
// every rho_j (gl), as sums of admissible monomials. part restricts to the
// zero/plus summand of the basis (well-defined for the permutation action;
// the full GL action only preserves the plus part).
std::vector<Polynomial> sigma_fixed(Solver& solver, const AdmissibleBasis& basis,
                                    BasisPart part = BasisPart::All);
std::vector<Polynomial> gl_fixed(Solver& solver, const AdmissibleBasis& basis,
                                 BasisPart part = BasisPart::All);

// Null space of the stacked systems (M_j - I) v = 0 over the given matrices.
std::vector<gf2::BitVec> fixed_vectors(const std::vector<gf2::BitMatrix>& generators,
                                       std::size_t dim);

}  // namespace hitprob
