#include "cpdirac/normal_bundle.hpp"

#include "cpdirac/line_bundle.hpp"
#include "strand_runner.hpp"

#include <algorithm>
#include <string>

namespace cpdirac {

namespace {

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

Int second_factor(const EmbeddingParams& p, const FamilyIndex& idx) {
    switch (idx.family) {
    case Family::F1: return 2 * p.d + 1 - p.n + 2 * (*idx.s + idx.l - *idx.epsilon);
    case Family::F2: return 2 * (idx.l + *idx.s + p.d) - (p.n + 1); // 2 * (l+s+d-(n+1)/2)
    case Family::F3: return 2 * p.d - p.n + 1 + 2 * (idx.l + *idx.s);
    }
    return 0;
}

} // namespace

std::vector<DecompositionTerm> decompose_normal_spinor(const EmbeddingParams& params) {
    const Int c = params.codim();
    std::vector<DecompositionTerm> terms;
    terms.reserve(static_cast<size_t>(c + 1));
    for (Int s = 0; s <= c; ++s)
        terms.push_back({c / 2 - s, binomial(c, s)});
    return terms;
}

Int normal_l_min(const EmbeddingParams& p, Family family, Int r, Int s, Int epsilon) {
    const Int hn = (p.n + 1) / 2;
    switch (family) {
    case Family::F1: return std::max(epsilon, hn - r - s);
    case Family::F2: return std::max<Int>(0, hn - s);
    case Family::F3: return std::max<Int>(0, hn - 1 - p.d - s);
    }
    throw ValidationError("normal_l_min: unknown family");
}

void validate_normal_index(const EmbeddingParams& p, const FamilyIndex& idx) {
    if (!idx.s)
        throw ValidationError("normal-bundle index requires s");
    const Int s = *idx.s;
    if (s < 0 || s > p.codim())
        throw ValidationError("normal-bundle index requires 0 <= s <= n-d = " +
                              std::to_string(p.codim()) + ": got s=" + std::to_string(s));
    switch (idx.family) {
    case Family::F1: {
        if (!idx.r || !idx.epsilon)
            throw ValidationError("family 1 index requires r and epsilon");
        const Int r = *idx.r;
        const Int eps = *idx.epsilon;
        if (r < 1 || r > p.d - 1)
            throw ValidationError("family 1 requires 1 <= r <= d-1 = " + std::to_string(p.d - 1) +
                                  ": got r=" + std::to_string(r));
        if (eps != 0 && eps != 1)
            throw ValidationError("family 1 requires epsilon in {0,1}: got epsilon=" +
                                  std::to_string(eps));
        const Int lmin = normal_l_min(p, Family::F1, r, s, eps);
        if (idx.l < lmin)
            throw ValidationError("family 1 requires l >= max(epsilon, (n+1)/2-r-s) = " +
                                  std::to_string(lmin) + ": got l=" + std::to_string(idx.l));
        break;
    }
    case Family::F2: {
        if (idx.r || idx.epsilon)
            throw ValidationError("family 2 index carries neither r nor epsilon");
        const Int lmin = normal_l_min(p, Family::F2, 0, s);
        if (idx.l < lmin)
            throw ValidationError("family 2 requires l >= max(0, (n+1)/2-s) = " +
                                  std::to_string(lmin) + ": got l=" + std::to_string(idx.l));
        break;
    }
    case Family::F3: {
        if (idx.r || idx.epsilon)
            throw ValidationError("family 3 index carries neither r nor epsilon");
        const Int lmin = normal_l_min(p, Family::F3, 0, s);
        if (idx.l < lmin)
            throw ValidationError("family 3 requires l >= max(0, (n-1)/2-d-s) = " +
                                  std::to_string(lmin) + ": got l=" + std::to_string(idx.l));
        break;
    }
    }
}

Int normal_family_eigenvalue(const EmbeddingParams& p, const FamilyIndex& idx) {
    validate_normal_index(p, idx);
    const Int l = idx.l;
    Int value = 0;
    switch (idx.family) {
    case Family::F1: value = 2 * (*idx.r + l) * second_factor(p, idx); break;
    case Family::F2: value = 2 * l * second_factor(p, idx); break;
    case Family::F3: value = 2 * (p.d + l) * second_factor(p, idx); break;
    }
    if (value < 0)
        throw ConsistencyError("negative eigenvalue at " + idx_repr(idx));
    return value;
}

BigInt normal_family_multiplicity(const EmbeddingParams& p, const FamilyIndex& idx) {
    validate_normal_index(p, idx);
    const Int d = p.d;
    const Int g = (p.n - 1) / 2;
    const Int s = *idx.s;
    const Int l = idx.l;
    Rational mult;
    switch (idx.family) {
    case Family::F1: {
        const Int r = *idx.r;
        const Int eps = *idx.epsilon;
        mult = rational_reduce(BigInt(d) * (d - g + r + s + 2 * l - eps),
                               BigInt(r + l) * (d - g + s + l - eps));
        mult *= binomial(p.n - d, s);
        mult *= binomial(d + l - eps, d);
        mult *= binomial(d - 1, d - r - eps);
        mult *= binomial(d - g - 1 + r + s + l, d); // (n+1)/2 = g+1
        break;
    }
    case Family::F2: {
        mult = binomial(p.n - d, s);
        for (Int k = 2; k <= d; ++k)
            mult *= Rational(k - 1 + l, k - 1);
        mult *= Rational(d + 2 * l - (g + 1) + s, d);
        for (Int j = 2; j <= d; ++j)
            mult *= Rational(d - j + 1 + l - (g + 1) + s, d - j + 1);
        break;
    }
    case Family::F3: {
        mult = binomial(p.n - d, s);
        for (Int k = 2; k <= d; ++k)
            mult *= Rational(k - 1 + l, k - 1);
        mult *= Rational(d + 2 * l + d - g + s, d);
        for (Int j = 2; j <= d; ++j)
            mult *= Rational(d - j + 1 + l + d - g + s, d - j + 1);
        break;
    }
    }
    return require_positive_integer(mult, "multiplicity at " + idx_repr(idx));
}

Weight normal_family_highest_weight(const EmbeddingParams& p, const FamilyIndex& idx) {
    validate_normal_index(p, idx);
    const Int m = p.codim() / 2 - *idx.s;
    return family_highest_weight(p.d, m, idx.without_s());
}

Spectrum enumerate_normal(const EmbeddingParams& p, Int cutoff, ExecMode mode) {
    if (cutoff < 0)
        throw ValidationError("cutoff must be >= 0");

    std::vector<FamilyIndex> strands;
    for (Int r = 1; r <= p.d - 1; ++r)
        for (Int s = 0; s <= p.codim(); ++s)
            for (Int eps = 0; eps <= 1; ++eps)
                strands.push_back(FamilyIndex::f1(r, eps, 0).with_s(s));
    for (Int s = 0; s <= p.codim(); ++s)
        strands.push_back(FamilyIndex::f2(0).with_s(s));
    for (Int s = 0; s <= p.codim(); ++s)
        strands.push_back(FamilyIndex::f3(0).with_s(s));

    const auto job = [&](Int i) {
        detail::StrandOutput out;
        FamilyIndex idx = strands[static_cast<size_t>(i)];
        idx.l = normal_l_min(p, idx.family, idx.r.value_or(0), *idx.s, idx.epsilon.value_or(0));
        for (;; ++idx.l) {
            const Int eigenvalue = normal_family_eigenvalue(p, idx);
            if (eigenvalue > cutoff) {
                if (second_factor(p, idx) > 0)
                    break;
                continue;
            }
            out.emplace_back(eigenvalue,
                             Contribution{idx, normal_family_multiplicity(p, idx),
                                          normal_family_highest_weight(p, idx)});
        }
        return out;
    };

    Spectrum spectrum;
    spectrum.d = p.d;
    spectrum.n = p.n;
    spectrum.cutoff = cutoff;
    spectrum.entries = detail::run_strands(static_cast<Int>(strands.size()), mode, job);
    return spectrum;
}

Int lowest_eigenvalue(const EmbeddingParams& p) {
    return p.d < (p.n + 1) / 2 ? 0 : (p.n + 1) * (2 * p.d + 1 - p.n);
}

FamilyMinima per_family_minima(const EmbeddingParams& p) {
    FamilyMinima minima;
    bool have_f2 = false;
    bool have_f3 = false;
    for (Int s = 0; s <= p.codim(); ++s) {
        for (Int r = 1; r <= p.d - 1; ++r)
            for (Int eps = 0; eps <= 1; ++eps) {
                FamilyIndex idx = FamilyIndex::f1(r, eps, 0).with_s(s);
                idx.l = normal_l_min(p, Family::F1, r, s, eps);
                const Int ev = normal_family_eigenvalue(p, idx);
                if (!minima.f1 || ev < *minima.f1)
                    minima.f1 = ev;
            }
        FamilyIndex f2 = FamilyIndex::f2(normal_l_min(p, Family::F2, 0, s)).with_s(s);
        const Int ev2 = normal_family_eigenvalue(p, f2);
        if (!have_f2 || ev2 < minima.f2) {
            minima.f2 = ev2;
            have_f2 = true;
        }
        FamilyIndex f3 = FamilyIndex::f3(normal_l_min(p, Family::F3, 0, s)).with_s(s);
        const Int ev3 = normal_family_eigenvalue(p, f3);
        if (!have_f3 || ev3 < minima.f3) {
            minima.f3 = ev3;
            have_f3 = true;
        }
    }
    return minima;
}

} // namespace cpdirac
