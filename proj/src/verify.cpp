#include "cpdirac/verify.hpp"

#include "cpdirac/line_bundle.hpp"
#include "cpdirac/normal_bundle.hpp"
#include "cpdirac/weyl.hpp"

#include <sstream>

namespace cpdirac {

namespace {

std::string describe(const FamilyIndex& idx, Int m) {
    std::ostringstream os;
    os << family_name(idx.family);
    if (idx.r)
        os << " r=" << *idx.r;
    if (idx.s)
        os << " s=" << *idx.s;
    if (idx.epsilon)
        os << " eps=" << *idx.epsilon;
    os << " l=" << idx.l << " (m=" << m << ")";
    return os.str();
}

} // namespace

VerifyReport verify_grid(const EmbeddingParams& p, Int extra_l) {
    if (extra_l < 0)
        throw ValidationError("max-l must be >= 0");
    VerifyReport report;

    const auto check = [&](const FamilyIndex& normal_idx, Int m) {
        const FamilyIndex line_idx = normal_idx.without_s();
        ++report.cases;

        const BigInt line_mult = family_multiplicity(p.d, m, line_idx);
        const BigInt dim = weyl_dim(p.d, family_highest_weight(p.d, m, line_idx));
        const BigInt weighted = binomial(p.codim(), *normal_idx.s) * line_mult;
        const BigInt normal_mult = normal_family_multiplicity(p, normal_idx);
        const Int line_ev = family_eigenvalue(p.d, m, line_idx);
        const Int normal_ev = normal_family_eigenvalue(p, normal_idx);

        std::string problem;
        if (line_mult != dim)
            problem = "closed form " + line_mult.str() + " != Weyl dimension " + dim.str();
        else if (normal_mult != weighted)
            problem = "normal multiplicity " + normal_mult.str() +
                      " != weighted line-bundle multiplicity " + weighted.str();
        else if (normal_ev != line_ev)
            problem = "normal eigenvalue " + std::to_string(normal_ev) +
                      " != line-bundle eigenvalue " + std::to_string(line_ev);
        if (!problem.empty()) {
            ++report.mismatches;
            if (report.first_mismatch.empty())
                report.first_mismatch = describe(normal_idx, m) + ": " + problem;
        }
    };

    for (Int s = 0; s <= p.codim(); ++s) {
        const Int m = p.codim() / 2 - s;
        for (Int r = 1; r <= p.d - 1; ++r)
            for (Int eps = 0; eps <= 1; ++eps) {
                const Int lmin = normal_l_min(p, Family::F1, r, s, eps);
                for (Int l = lmin; l <= lmin + extra_l; ++l)
                    check(FamilyIndex::f1(r, eps, l).with_s(s), m);
            }
        const Int lmin2 = normal_l_min(p, Family::F2, 0, s);
        for (Int l = lmin2; l <= lmin2 + extra_l; ++l)
            check(FamilyIndex::f2(l).with_s(s), m);
        const Int lmin3 = normal_l_min(p, Family::F3, 0, s);
        for (Int l = lmin3; l <= lmin3 + extra_l; ++l)
            check(FamilyIndex::f3(l).with_s(s), m);
    }
    return report;
}

} // namespace cpdirac
