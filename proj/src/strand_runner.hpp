#pragma once

#include "cpdirac/types.hpp"

#include <map>
#include <utility>
#include <vector>

namespace cpdirac::detail {

using StrandOutput = std::vector<std::pair<Int, Contribution>>;

// Runs one job per enumeration strand, serially or via OpenMP, and merges the
// outputs in strand order. The merged result is therefore independent of
// thread scheduling: parallel and serial execution produce identical spectra.
template <typename Job>
std::vector<SpectrumEntry> run_strands(Int strand_count, ExecMode mode, Job&& job) {
    std::vector<StrandOutput> outputs(static_cast<size_t>(strand_count));
    if (mode == ExecMode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (Int i = 0; i < strand_count; ++i)
            outputs[static_cast<size_t>(i)] = job(i);
    } else {
        for (Int i = 0; i < strand_count; ++i)
            outputs[static_cast<size_t>(i)] = job(i);
    }

    std::map<Int, SpectrumEntry> merged;
    for (StrandOutput& strand : outputs)
        for (auto& [eigenvalue, contribution] : strand) {
            SpectrumEntry& entry = merged[eigenvalue];
            entry.eigenvalue = eigenvalue;
            entry.multiplicity += contribution.multiplicity;
            entry.contributions.push_back(std::move(contribution));
        }

    std::vector<SpectrumEntry> entries;
    entries.reserve(merged.size());
    for (auto& [eigenvalue, entry] : merged)
        entries.push_back(std::move(entry));
    return entries;
}

} // namespace cpdirac::detail
