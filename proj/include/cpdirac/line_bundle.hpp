#pragma once

#include "cpdirac/types.hpp"

namespace cpdirac {

// Spectrum of the squared Dirac operator of CP^d (Fubini-Study metric of
// constant holomorphic sectional curvature 4) twisted by the m-th power of
// the tautological bundle, for odd d and arbitrary integer m. Eigenvalues
// come in three families indexed by (r, epsilon, l) resp. l:
//
//   family 1: 2(r+l)(d+1+2(l-m-epsilon)),  1 <= r <= d-1, epsilon in {0,1},
//             l >= max(epsilon, (d+1)/2 - r + m)
//   family 2: 2l(2l+d-1-2m),               l >= max(0, m + (d+1)/2)
//   family 3: 2(d+l)(d+1+2(l-m)),          l >= max(0, m - (d+1)/2)

// Smallest admissible l of the (family, r, epsilon) strand.
Int line_l_min(Int d, Int m, Family family, Int r = 0, Int epsilon = 0);

// Rejects indices violating the family constraints, naming the inequality.
void validate_line_index(Int d, Int m, const FamilyIndex& idx);

Int family_eigenvalue(Int d, Int m, const FamilyIndex& idx);

// Closed-form multiplicity, evaluated in exact rational arithmetic and
// required to reduce to a positive integer. Empty products (d = 1) are 1.
BigInt family_multiplicity(Int d, Int m, const FamilyIndex& idx);

// Highest weight in theta-coordinates of the SU(d+1) representation carrying
// the contribution; weyl_dim of it equals family_multiplicity.
Weight family_highest_weight(Int d, Int m, const FamilyIndex& idx);

// Complete spectrum up to cutoff: every admissible index whose eigenvalue is
// <= cutoff appears in exactly one entry. Contributions are ordered by
// (family, r, epsilon, l); serial and parallel execution agree exactly.
Spectrum enumerate_line_bundle(Int d, Int m, Int cutoff, ExecMode mode = ExecMode::parallel);

} // namespace cpdirac
