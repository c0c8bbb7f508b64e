#pragma once

#include "cpdirac/arith.hpp"

#include <optional>
#include <vector>

namespace cpdirac {

// Odd complex dimensions d < n of the embedded and the ambient projective
// space. n - d is then even and >= 2.
struct EmbeddingParams {
    Int d;
    Int n;

    EmbeddingParams(Int d_, Int n_);

    Int codim() const { return n - d; }
};

enum class Family : int { F1 = 1, F2 = 2, F3 = 3 };

const char* family_name(Family family);

// Identifies one eigenvalue contribution. r and epsilon are present only for
// the first family; s is present when enumerating the normal-bundle twist
// (the line-bundle power is then (n-d)/2 - s).
struct FamilyIndex {
    Family family = Family::F2;
    std::optional<Int> r;
    std::optional<Int> s;
    std::optional<Int> epsilon;
    Int l = 0;

    static FamilyIndex f1(Int r, Int epsilon, Int l);
    static FamilyIndex f2(Int l);
    static FamilyIndex f3(Int l);
    FamilyIndex with_s(Int s) const;
    FamilyIndex without_s() const;

    bool operator==(const FamilyIndex&) const = default;
};

// Integer vector in theta-coordinates labelling an SU(d+1) representation.
using Weight = std::vector<Int>;

struct Contribution {
    FamilyIndex index;
    BigInt multiplicity;
    Weight highest_weight;
};

struct SpectrumEntry {
    Int eigenvalue = 0;
    BigInt multiplicity;
    std::vector<Contribution> contributions;
};

// Aggregated spectrum of the squared twisted Dirac operator, entries sorted
// ascending by eigenvalue. Exactly one of m (line-bundle power) and
// n (ambient dimension) is set.
struct Spectrum {
    Int d = 1;
    std::optional<Int> m;
    std::optional<Int> n;
    Int cutoff = 0;
    std::vector<SpectrumEntry> entries;

    const SpectrumEntry* find(Int eigenvalue) const;
    BigInt multiplicity_at(Int eigenvalue) const;
    // Sum of multiplicities over eigenvalues <= bound.
    BigInt cumulative_multiplicity(Int bound) const;
};

enum class ExecMode { serial, parallel };

} // namespace cpdirac
