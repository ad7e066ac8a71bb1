// Times the OpenMP kernels against their serial reference twins on identical
// inputs and reports the speedup. Results double as a consistency check: any
// mismatch between the two paths aborts the run.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ghseq/correlation.hpp"
#include "ghseq/gh_core.hpp"
#include "ghseq/reference.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double seconds(F&& work) {
    const auto start = Clock::now();
    work();
    return std::chrono::duration<double>(Clock::now() - start).count();
}

ghseq::BipolarSequence random_bipolar(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::int8_t> values(n);
    for (auto& v : values) v = (rng() & 1) ? 1 : -1;
    return ghseq::BipolarSequence(std::move(values));
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %.2fx\n",
                name, serial, parallel, serial / parallel);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp max threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp; both columns run serial code\n");
#endif

    {
        constexpr std::int64_t m_max = 20000;
        std::vector<ghseq::PeriodReport> serial_reports, parallel_reports;
        const double s = seconds([&] {
            serial_reports = ghseq::reference::composite_bound_sweep_serial(m_max);
        });
        const double p = seconds(
            [&] { parallel_reports = ghseq::composite_bound_sweep(m_max); });
        if (serial_reports.size() != parallel_reports.size()) return 1;
        for (std::size_t i = 0; i < serial_reports.size(); ++i)
            if (serial_reports[i].period != parallel_reports[i].period)
                return 1;
        report("composite sweep m<=20000", s, p);
    }

    {
        constexpr std::int64_t p_max = 100000;
        std::vector<ghseq::PeriodReport> serial_reports, parallel_reports;
        const double s = seconds(
            [&] { serial_reports = ghseq::reference::theorem_sweep_serial(p_max); });
        const double p =
            seconds([&] { parallel_reports = ghseq::theorem_sweep(p_max); });
        if (serial_reports.size() != parallel_reports.size()) return 1;
        for (std::size_t i = 0; i < serial_reports.size(); ++i)
            if (serial_reports[i].period != parallel_reports[i].period)
                return 1;
        report("theorem sweep p<100000", s, p);
    }

    {
        constexpr std::size_t n = 20000;
        const auto a = random_bipolar(n, 1);
        const auto b = random_bipolar(n, 2);
        std::vector<double> serial_values, parallel_values;
        const double s = seconds(
            [&] { serial_values = ghseq::reference::ccf_naive(a, b).values(); });
        const double p =
            seconds([&] { parallel_values = ghseq::ccf(a, b).values(); });
        if (serial_values != parallel_values) return 1;
        report("ccf n=20000", s, p);
    }

    return 0;
}
