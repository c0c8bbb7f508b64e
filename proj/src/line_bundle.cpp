#include "cpdirac/line_bundle.hpp"

#include "strand_runner.hpp"

#include <algorithm>
#include <string>

namespace cpdirac {

namespace {

void check_d_odd(Int d) {
    if (d < 1)
        throw ValidationError("d must be >= 1");
    if (d % 2 == 0)
        throw ValidationError("d must be odd");
}

std::string idx_repr(const FamilyIndex& idx) {
    std::string out = family_name(idx.family);
    out += "(";
    if (idx.r)
        out += "r=" + std::to_string(*idx.r) + ",";
    if (idx.s)
        out += "s=" + std::to_string(*idx.s) + ",";
    if (idx.epsilon)
        out += "eps=" + std::to_string(*idx.epsilon) + ",";
    out += "l=" + std::to_string(idx.l) + ")";
    return out;
}

// Second factor of the eigenvalue product; increases by 2 per unit l, so the
// eigenvalue is strictly increasing in l once this is positive.
Int second_factor(Int d, Int m, const FamilyIndex& idx) {
    switch (idx.family) {
    case Family::F1: return d + 1 + 2 * (idx.l - m - *idx.epsilon);
    case Family::F2: return 2 * idx.l + d - 1 - 2 * m;
    case Family::F3: return d + 1 + 2 * (idx.l - m);
    }
    return 0;
}

} // namespace

Int line_l_min(Int d, Int m, Family family, Int r, Int epsilon) {
    const Int h = (d + 1) / 2;
    switch (family) {
    case Family::F1: return std::max(epsilon, h - r + m);
    case Family::F2: return std::max<Int>(0, m + h);
    case Family::F3: return std::max<Int>(0, m - h);
    }
    throw ValidationError("line_l_min: unknown family");
}

void validate_line_index(Int d, Int m, const FamilyIndex& idx) {
    check_d_odd(d);
    if (idx.s)
        throw ValidationError("line-bundle index must not carry s: " + idx_repr(idx));
    switch (idx.family) {
    case Family::F1: {
        if (!idx.r || !idx.epsilon)
            throw ValidationError("family 1 index requires r and epsilon");
        const Int r = *idx.r;
        const Int eps = *idx.epsilon;
        if (r < 1 || r > d - 1)
            throw ValidationError("family 1 requires 1 <= r <= d-1 = " + std::to_string(d - 1) +
                                  ": got r=" + std::to_string(r));
        if (eps != 0 && eps != 1)
            throw ValidationError("family 1 requires epsilon in {0,1}: got epsilon=" +
                                  std::to_string(eps));
        const Int lmin = line_l_min(d, m, Family::F1, r, eps);
        if (idx.l < lmin)
            throw ValidationError("family 1 requires l >= max(epsilon, (d+1)/2-r+m) = " +
                                  std::to_string(lmin) + ": got l=" + std::to_string(idx.l));
        break;
    }
    case Family::F2: {
        if (idx.r || idx.epsilon)
            throw ValidationError("family 2 index carries neither r nor epsilon");
        const Int lmin = line_l_min(d, m, Family::F2);
        if (idx.l < lmin)
            throw ValidationError("family 2 requires l >= max(0, m+(d+1)/2) = " +
                                  std::to_string(lmin) + ": got l=" + std::to_string(idx.l));
        break;
    }
    case Family::F3: {
        if (idx.r || idx.epsilon)
            throw ValidationError("family 3 index carries neither r nor epsilon");
        const Int lmin = line_l_min(d, m, Family::F3);
        if (idx.l < lmin)
            throw ValidationError("family 3 requires l >= max(0, m-(d+1)/2) = " +
                                  std::to_string(lmin) + ": got l=" + std::to_string(idx.l));
        break;
    }
    }
}

Int family_eigenvalue(Int d, Int m, const FamilyIndex& idx) {
    validate_line_index(d, m, idx);
    const Int l = idx.l;
    Int value = 0;
    switch (idx.family) {
    case Family::F1: value = 2 * (*idx.r + l) * second_factor(d, m, idx); break;
    case Family::F2: value = 2 * l * second_factor(d, m, idx); break;
    case Family::F3: value = 2 * (d + l) * second_factor(d, m, idx); break;
    }
    if (value < 0)
        throw ConsistencyError("negative eigenvalue at " + idx_repr(idx));
    return value;
}

BigInt family_multiplicity(Int d, Int m, const FamilyIndex& idx) {
    validate_line_index(d, m, idx);
    const Int h = (d + 1) / 2;
    const Int l = idx.l;
    Rational mult;
    switch (idx.family) {
    case Family::F1: {
        const Int r = *idx.r;
        const Int eps = *idx.epsilon;
        mult = rational_reduce(BigInt(d) * (h + r - m + 2 * l - eps),
                               BigInt(r + l) * (h - m + l - eps));
        mult *= binomial(d + l - eps, d);
        mult *= binomial(d - 1, d - r - eps);
        mult *= binomial(h - 1 + r - m + l, d); // (d-1)/2 = h-1
        break;
    }
    case Family::F2: {
        mult = 1;
        for (Int k = 2; k <= d; ++k)
            mult *= Rational(k - 1 + l, k - 1);
        mult *= Rational(d + 2 * l - h - m, d);
        for (Int j = 2; j <= d; ++j)
            mult *= Rational(d - j + 1 + l - h - m, d - j + 1);
        break;
    }
    case Family::F3: {
        mult = 1;
        for (Int k = 2; k <= d; ++k)
            mult *= Rational(k - 1 + l, k - 1);
        mult *= Rational(d + 2 * l + h - m, d);
        for (Int j = 2; j <= d; ++j)
            mult *= Rational(d - j + 1 + l + h - m, d - j + 1);
        break;
    }
    }
    return require_positive_integer(mult, "multiplicity at " + idx_repr(idx));
}

Weight family_highest_weight(Int d, Int m, const FamilyIndex& idx) {
    validate_line_index(d, m, idx);
    const Int h = (d + 1) / 2;
    const Int l = idx.l;
    Weight w;
    w.reserve(static_cast<size_t>(d));
    switch (idx.family) {
    case Family::F1: {
        const Int r = *idx.r;
        const Int eps = *idx.epsilon;
        w.push_back(r + 2 * l - (h - 1) - m - eps);
        w.insert(w.end(), static_cast<size_t>(r - 1), r + l - (h - 1) - m);
        w.push_back(r + l - h - m + eps);
        w.insert(w.end(), static_cast<size_t>(d - r - 1), r + l - h - m);
        break;
    }
    case Family::F2:
        w.push_back(2 * l - h - m);
        w.insert(w.end(), static_cast<size_t>(d - 1), l - h - m);
        break;
    case Family::F3:
        w.push_back(2 * l + h - m);
        w.insert(w.end(), static_cast<size_t>(d - 1), l + h - m);
        break;
    }
    return w;
}

Spectrum enumerate_line_bundle(Int d, Int m, Int cutoff, ExecMode mode) {
    check_d_odd(d);
    if (cutoff < 0)
        throw ValidationError("cutoff must be >= 0");

    // One strand per (family, r, epsilon); contributions come out ordered by
    // (family, r, epsilon, l).
    std::vector<FamilyIndex> strands;
    for (Int r = 1; r <= d - 1; ++r)
        for (Int eps = 0; eps <= 1; ++eps)
            strands.push_back(FamilyIndex::f1(r, eps, 0));
    strands.push_back(FamilyIndex::f2(0));
    strands.push_back(FamilyIndex::f3(0));

    const auto job = [&](Int i) {
        detail::StrandOutput out;
        FamilyIndex idx = strands[static_cast<size_t>(i)];
        idx.l = line_l_min(d, m, idx.family, idx.r.value_or(0), idx.epsilon.value_or(0));
        for (;; ++idx.l) {
            const Int eigenvalue = family_eigenvalue(d, m, idx);
            if (eigenvalue > cutoff) {
                if (second_factor(d, m, idx) > 0)
                    break; // strictly increasing from here on
                continue;
            }
            out.emplace_back(eigenvalue,
                             Contribution{idx, family_multiplicity(d, m, idx),
                                          family_highest_weight(d, m, idx)});
        }
        return out;
    };

    Spectrum spectrum;
    spectrum.d = d;
    spectrum.m = m;
    spectrum.cutoff = cutoff;
    spectrum.entries = detail::run_strands(static_cast<Int>(strands.size()), mode, job);
    return spectrum;
}

} // namespace cpdirac
