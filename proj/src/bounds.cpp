#include "cpdirac/bounds.hpp"

#include "cpdirac/normal_bundle.hpp"

#include <algorithm>

namespace cpdirac {

Rational upper_bound(Int d, const Rational& alpha_sq) {
    if (d < 1)
        throw ValidationError("d must be >= 1");
    if (alpha_sq <= 0)
        throw ValidationError("alpha^2 must be positive");
    const Int factor = (d % 2 != 0) ? (d + 1) * (d + 1) : d * (d + 2);
    return factor * alpha_sq;
}

BigInt killing_spinor_count(Int n) {
    if (n < 3)
        throw ValidationError("n must be >= 3");
    if (n % 2 == 0)
        throw ValidationError("n must be odd");
    return 2 * binomial(n, (n + 1) / 2);
}

Int scalar_curvature(Int d) {
    if (d < 1)
        throw ValidationError("d must be >= 1");
    return 4 * d * (d + 1);
}

CurvatureSpectrum re_spectrum_totally_geodesic(const EmbeddingParams& p) {
    CurvatureSpectrum spectrum;
    const Int c = p.codim();
    spectrum.values.reserve(static_cast<size_t>((p.d + 1) * (c + 1)));
    for (Int r = 0; r <= p.d; ++r)
        for (Int s = 0; s <= c; ++s)
            spectrum.values.push_back(4 * (2 * r - p.d) * (2 * s - c));
    std::sort(spectrum.values.begin(), spectrum.values.end());
    spectrum.kappa1 = spectrum.values.front();
    return spectrum;
}

Rational kirchberg_lower_bound(Int d, Int scal0, Int kappa1) {
    if (d < 1)
        throw ValidationError("d must be >= 1");
    const BigInt bracket = BigInt(scal0) + kappa1;
    if (d % 2 != 0)
        return rational_reduce((d + 1) * bracket, 4 * d);
    return rational_reduce(d * bracket, 4 * (d - 1));
}

std::pair<Rational, Rational> type_rr1_bounds(Int d, Int r, Int scal0, Int kappa1) {
    if (d < 1)
        throw ValidationError("d must be >= 1");
    if (r < 0 || r > d - 1)
        throw ValidationError("type (r,r+1) requires 0 <= r <= d-1 = " + std::to_string(d - 1) +
                              ": got r=" + std::to_string(r));
    const BigInt bracket = BigInt(scal0) + kappa1;
    // 1/(4(1-a_r)) = (r+1)/(2(2r+1)) and 1/(4(1-b_{r+1})) = (d-r)/(2(2(d-r)-1))
    const Rational first = rational_reduce((r + 1) * bracket, 2 * (2 * r + 1));
    const Rational second = rational_reduce((d - r) * bracket, 2 * (2 * (d - r) - 1));
    return {first, second};
}

BoundsReport make_bounds_report(const EmbeddingParams& p, std::optional<Int> scal0) {
    BoundsReport report{p, Rational(1), 0, 0, 0, 0, Rational(0), 0};
    const Rational bound = upper_bound(p.d, report.alpha_sq);
    report.upper_bound = static_cast<Int>(boost::multiprecision::numerator(bound));
    report.mu = killing_spinor_count(p.n);
    report.scal0 = scal0.value_or(scalar_curvature(p.d));
    report.kappa1 = re_spectrum_totally_geodesic(p).kappa1;
    report.kirchberg_bound = kirchberg_lower_bound(p.d, report.scal0, report.kappa1);
    report.lowest = lowest_eigenvalue(p);
    if (!scal0 && report.kirchberg_bound > report.lowest)
        throw ConsistencyError("Kirchberg bound exceeds the lowest eigenvalue");
    return report;
}

const char* verdict_name(Verdict verdict) {
    return verdict == Verdict::Sharp ? "Sharp" : "NotSharp";
}

SharpnessReport sharpness_report(const EmbeddingParams& p) {
    const Int bound = (p.d + 1) * (p.d + 1);
    const Spectrum spectrum = enumerate_normal(p, bound);
    SharpnessReport report{p, bound, killing_spinor_count(p.n), 0, 0, 0, Verdict::NotSharp};
    report.mult_zero = spectrum.multiplicity_at(0);
    report.mult_bound = spectrum.multiplicity_at(bound);
    report.cumulative_below = spectrum.cumulative_multiplicity(bound);
    const BigInt strictly_below = report.cumulative_below - report.mult_bound;
    report.verdict = strictly_below < report.mu ? Verdict::Sharp : Verdict::NotSharp;
    return report;
}

} // namespace cpdirac
