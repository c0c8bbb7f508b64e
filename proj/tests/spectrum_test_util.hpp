#pragma once

#include "cpdirac/types.hpp"

#include <map>

namespace cpdirac::test {

inline std::map<Int, BigInt> as_map(const Spectrum& spectrum) {
    std::map<Int, BigInt> out;
    for (const SpectrumEntry& entry : spectrum.entries)
        out[entry.eigenvalue] = entry.multiplicity;
    return out;
}

inline bool identical(const Spectrum& a, const Spectrum& b) {
    if (a.entries.size() != b.entries.size())
        return false;
    for (size_t i = 0; i < a.entries.size(); ++i) {
        const SpectrumEntry& x = a.entries[i];
        const SpectrumEntry& y = b.entries[i];
        if (x.eigenvalue != y.eigenvalue || x.multiplicity != y.multiplicity ||
            x.contributions.size() != y.contributions.size())
            return false;
        for (size_t j = 0; j < x.contributions.size(); ++j) {
            if (!(x.contributions[j].index == y.contributions[j].index) ||
                x.contributions[j].multiplicity != y.contributions[j].multiplicity ||
                x.contributions[j].highest_weight != y.contributions[j].highest_weight)
                return false;
        }
    }
    return true;
}

} // namespace cpdirac::test
