#pragma once

#include "cpdirac/types.hpp"

#include <optional>
#include <utility>

namespace cpdirac {

// Upper bound satisfied by mu small eigenvalues of the squared twisted Dirac
// operator: (d+1)^2 alpha^2 for odd d, d(d+2) alpha^2 for even d.
Rational upper_bound(Int d, const Rational& alpha_sq);

// mu = 2 C(n, (n+1)/2), the dimension of the space of Kaehlerian Killing
// spinors of CP^n (n odd).
BigInt killing_spinor_count(Int n);

// Scalar curvature of CP^d in the curvature-4 normalization: 4d(d+1).
Int scalar_curvature(Int d);

// Eigenvalues of the curvature endomorphism of the normal spinor bundle in the
// totally geodesic case, where it reduces to -4 Omega . Omega_N: the values
// 4(2r-d)(2s-(n-d)) over 0 <= r <= d, 0 <= s <= n-d.
struct CurvatureSpectrum {
    std::vector<Int> values; // full multiset, sorted ascending
    Int kappa1;              // minimum, equal to -4d(n-d)
};

CurvatureSpectrum re_spectrum_totally_geodesic(const EmbeddingParams& params);

// Kirchberg-type lower bound for the squared eigenvalues:
// (d+1)/(4d) (scal0 + kappa1) for odd d, d/(4(d-1)) for even d.
Rational kirchberg_lower_bound(Int d, Int scal0, Int kappa1);

// The two twistor-operator bounds for an eigenspinor of type (r, r+1),
// 0 <= r <= d-1: 1/(4(1-a_r)) resp. 1/(4(1-b_{r+1})) times scal0 + kappa1,
// with a_r = 1/(2(r+1)) and b_r = 1/(2(d-r+1)).
std::pair<Rational, Rational> type_rr1_bounds(Int d, Int r, Int scal0, Int kappa1);

struct BoundsReport {
    EmbeddingParams params;
    Rational alpha_sq;
    Int upper_bound;
    BigInt mu;
    Int scal0;
    Int kappa1;
    Rational kirchberg_bound;
    Int lowest;
};

// Assembles the report at alpha^2 = 1; scal0 defaults to 4d(d+1) but may be
// overridden. The Kirchberg bound never exceeding the lowest eigenvalue is
// asserted when scal0 is the default.
BoundsReport make_bounds_report(const EmbeddingParams& params,
                                std::optional<Int> scal0 = std::nullopt);

enum class Verdict { Sharp, NotSharp };

const char* verdict_name(Verdict verdict);

struct SharpnessReport {
    EmbeddingParams params;
    Int upper_bound;
    BigInt mu;
    BigInt mult_zero;        // aggregated multiplicity of eigenvalue 0
    BigInt mult_bound;       // aggregated multiplicity at the upper bound
    BigInt cumulative_below; // aggregated multiplicity of eigenvalues <= bound
    Verdict verdict;
};

// Sharp iff strictly fewer than mu eigenvalues (with multiplicity) lie
// strictly below the upper bound, so that the bound itself is attained.
SharpnessReport sharpness_report(const EmbeddingParams& params);

} // namespace cpdirac
