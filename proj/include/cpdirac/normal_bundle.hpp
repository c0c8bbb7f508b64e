#pragma once

#include "cpdirac/types.hpp"

#include <array>
#include <optional>

namespace cpdirac {

// The spinor bundle of the normal bundle of CP^d -> CP^n splits unitarily and
// parallelly into line-bundle powers: C(n-d, s) copies of gamma_d^((n-d)/2 - s)
// for s = 0..n-d.
struct DecompositionTerm {
    Int power;
    BigInt multiplicity;
};

// Terms with powers descending from (n-d)/2 to -(n-d)/2; multiplicities sum
// to 2^(n-d), the rank of the normal spinor bundle.
std::vector<DecompositionTerm> decompose_normal_spinor(const EmbeddingParams& params);

// Spectrum of the Dirac operator of CP^d twisted by the normal spinor bundle,
// squared. Families in the (r, s, epsilon, l) parametrization:
//
//   family 1: 2(r+l)(2d+1-n+2(s+l-epsilon)),  l >= max(epsilon, (n+1)/2-r-s)
//   family 2: 4l(l+s+d-(n+1)/2),              l >= max(0, (n+1)/2-s)
//   family 3: 2(d+l)(2d-n+1+2(l+s)),          l >= max(0, (n-1)/2-d-s)
//
// with 1 <= r <= d-1, 0 <= s <= n-d, epsilon in {0,1}. Multiplicities carry
// the decomposition factor C(n-d, s).

Int normal_l_min(const EmbeddingParams& params, Family family, Int r = 0, Int s = 0,
                 Int epsilon = 0);

void validate_normal_index(const EmbeddingParams& params, const FamilyIndex& idx);

Int normal_family_eigenvalue(const EmbeddingParams& params, const FamilyIndex& idx);

BigInt normal_family_multiplicity(const EmbeddingParams& params, const FamilyIndex& idx);

// Highest weight of the underlying SU(d+1) representation; the contribution's
// multiplicity equals C(n-d, s) * weyl_dim of this weight.
Weight normal_family_highest_weight(const EmbeddingParams& params, const FamilyIndex& idx);

// Complete aggregated spectrum up to cutoff; contributions ordered by
// (family, r, s, epsilon, l). Serial and parallel execution agree exactly.
Spectrum enumerate_normal(const EmbeddingParams& params, Int cutoff,
                          ExecMode mode = ExecMode::parallel);

// 0 for d < (n+1)/2, else (n+1)(2d+1-n).
Int lowest_eigenvalue(const EmbeddingParams& params);

// Smallest eigenvalue each family contributes (family 1 is empty for d = 1).
// Within a strand the eigenvalue is nondecreasing in l, so the minimum sits
// at the strand's lower bound.
struct FamilyMinima {
    std::optional<Int> f1;
    Int f2 = 0;
    Int f3 = 0;
};

FamilyMinima per_family_minima(const EmbeddingParams& params);

} // namespace cpdirac
