#include "cpdirac/types.hpp"

namespace cpdirac {

EmbeddingParams::EmbeddingParams(Int d_, Int n_) : d(d_), n(n_) {
    if (d < 1)
        throw ValidationError("d must be >= 1");
    if (d % 2 == 0)
        throw ValidationError("d must be odd");
    if (n < 3)
        throw ValidationError("n must be >= 3");
    if (n % 2 == 0)
        throw ValidationError("n must be odd");
    if (d >= n)
        throw ValidationError("d must be < n");
}

const char* family_name(Family family) {
    switch (family) {
    case Family::F1: return "F1";
    case Family::F2: return "F2";
    case Family::F3: return "F3";
    }
    return "?";
}

FamilyIndex FamilyIndex::f1(Int r, Int epsilon, Int l) {
    FamilyIndex idx;
    idx.family = Family::F1;
    idx.r = r;
    idx.epsilon = epsilon;
    idx.l = l;
    return idx;
}

FamilyIndex FamilyIndex::f2(Int l) {
    FamilyIndex idx;
    idx.family = Family::F2;
    idx.l = l;
    return idx;
}

FamilyIndex FamilyIndex::f3(Int l) {
    FamilyIndex idx;
    idx.family = Family::F3;
    idx.l = l;
    return idx;
}

FamilyIndex FamilyIndex::with_s(Int s) const {
    FamilyIndex idx = *this;
    idx.s = s;
    return idx;
}

FamilyIndex FamilyIndex::without_s() const {
    FamilyIndex idx = *this;
    idx.s.reset();
    return idx;
}

const SpectrumEntry* Spectrum::find(Int eigenvalue) const {
    for (const SpectrumEntry& entry : entries)
        if (entry.eigenvalue == eigenvalue)
            return &entry;
    return nullptr;
}

BigInt Spectrum::multiplicity_at(Int eigenvalue) const {
    const SpectrumEntry* entry = find(eigenvalue);
    return entry ? entry->multiplicity : BigInt(0);
}

BigInt Spectrum::cumulative_multiplicity(Int bound) const {
    BigInt total = 0;
    for (const SpectrumEntry& entry : entries) {
        if (entry.eigenvalue > bound)
            break;
        total += entry.multiplicity;
    }
    return total;
}

} // namespace cpdirac
