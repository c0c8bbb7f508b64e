// Compares the serial reference enumeration against the OpenMP-parallel one
// and reports timings. The outputs are checked for exact agreement first.

#include "cpdirac/line_bundle.hpp"
#include "cpdirac/normal_bundle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace cpdirac;

namespace {

double time_ms(const std::function<Spectrum()>& work, int repeat, Spectrum& out) {
    double best = 1e300;
    for (int i = 0; i < repeat; ++i) {
        const auto start = std::chrono::steady_clock::now();
        out = work();
        const auto stop = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(stop - start).count());
    }
    return best;
}

bool same_spectrum(const Spectrum& a, const Spectrum& b) {
    if (a.entries.size() != b.entries.size())
        return false;
    for (size_t i = 0; i < a.entries.size(); ++i) {
        const SpectrumEntry& x = a.entries[i];
        const SpectrumEntry& y = b.entries[i];
        if (x.eigenvalue != y.eigenvalue || x.multiplicity != y.multiplicity ||
            x.contributions.size() != y.contributions.size())
            return false;
        for (size_t j = 0; j < x.contributions.size(); ++j)
            if (!(x.contributions[j].index == y.contributions[j].index) ||
                x.contributions[j].multiplicity != y.contributions[j].multiplicity)
                return false;
    }
    return true;
}

BigInt total_multiplicity(const Spectrum& s) {
    BigInt total = 0;
    for (const SpectrumEntry& e : s.entries)
        total += e.multiplicity;
    return total;
}

} // namespace

int main(int argc, char** argv) {
    Int d = 5, n = 11, cutoff = 2000000;
    int repeat = 3;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (!std::strcmp(argv[i], "--d"))
            d = std::atoll(argv[i + 1]);
        else if (!std::strcmp(argv[i], "--n"))
            n = std::atoll(argv[i + 1]);
        else if (!std::strcmp(argv[i], "--max-eig"))
            cutoff = std::atoll(argv[i + 1]);
        else if (!std::strcmp(argv[i], "--repeat"))
            repeat = std::atoi(argv[i + 1]);
        else {
            std::fprintf(stderr, "usage: bench_spectrum [--d D] [--n N] [--max-eig E] [--repeat R]\n");
            return 2;
        }
    }

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    const EmbeddingParams params(d, n);
    std::printf("workload: normal twist d=%lld n=%lld max-eig=%lld (best of %d)\n",
                d, n, cutoff, repeat);

    Spectrum serial, parallel;
    const double t_serial =
        time_ms([&] { return enumerate_normal(params, cutoff, ExecMode::serial); }, repeat, serial);
    const double t_parallel =
        time_ms([&] { return enumerate_normal(params, cutoff, ExecMode::parallel); }, repeat,
                parallel);

    if (!same_spectrum(serial, parallel)) {
        std::fprintf(stderr, "FAIL: serial and parallel spectra differ\n");
        return 1;
    }

    std::printf("entries: %zu, total multiplicity: %s\n", serial.entries.size(),
                total_multiplicity(serial).str().c_str());
    std::printf("%-10s %12.3f ms\n", "serial", t_serial);
    std::printf("%-10s %12.3f ms   speedup x%.2f\n", "parallel", t_parallel,
                t_parallel > 0 ? t_serial / t_parallel : 0.0);

    Spectrum line_serial, line_parallel;
    std::printf("workload: line-bundle twist d=%lld m=0 max-eig=%lld (best of %d)\n", d, cutoff,
                repeat);
    const double ls = time_ms(
        [&] { return enumerate_line_bundle(d, 0, cutoff, ExecMode::serial); }, repeat, line_serial);
    const double lp =
        time_ms([&] { return enumerate_line_bundle(d, 0, cutoff, ExecMode::parallel); }, repeat,
                line_parallel);
    if (!same_spectrum(line_serial, line_parallel)) {
        std::fprintf(stderr, "FAIL: serial and parallel spectra differ\n");
        return 1;
    }
    std::printf("entries: %zu, total multiplicity: %s\n", line_serial.entries.size(),
                total_multiplicity(line_serial).str().c_str());
    std::printf("%-10s %12.3f ms\n", "serial", ls);
    std::printf("%-10s %12.3f ms   speedup x%.2f\n", "parallel", lp, lp > 0 ? ls / lp : 0.0);
    return 0;
}
