#pragma once

#include "cpdirac/types.hpp"

namespace cpdirac {

// Root data of SU(d+1) in theta-coordinates (weights are integer vectors of
// length d). The positive roots are theta_j - theta_k for j < k together with
// theta_j + sum_k theta_k for each j; their half-sum is
// delta_plus = (d, d-1, ..., 1).
struct RootSystem {
    Int d;
    std::vector<Weight> positive_roots;
    Weight delta_plus;
};

RootSystem root_system(Int d);

// <u, v> = u . beta . v^T with beta_jk = 2/(d+1) * (-1 + (d+1) delta_jk).
Rational inner(Int d, const Weight& u, const Weight& v);

// Weyl dimension formula: product over all positive roots of
// 1 + <lambda, alpha> / <delta_plus, alpha>. The result must come out a
// positive integer; anything else flags an inadmissible weight.
BigInt weyl_dim(Int d, const Weight& lambda);

} // namespace cpdirac
