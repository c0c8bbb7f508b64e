#pragma once

#include "cpdirac/types.hpp"

#include <string>

namespace cpdirac {

struct VerifyReport {
    Int cases = 0;
    Int mismatches = 0;
    std::string first_mismatch; // empty when everything agreed
};

// Cross-checks every admissible index of the (d, n) grid, with l running from
// its lower bound to lower bound + extra_l:
//   - closed-form line-bundle multiplicity == Weyl dimension of its weight,
//   - normal-bundle eigenvalue and multiplicity == the line-bundle values at
//     twist power (n-d)/2 - s, weighted by C(n-d, s).
VerifyReport verify_grid(const EmbeddingParams& params, Int extra_l);

} // namespace cpdirac
