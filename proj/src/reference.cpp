#include "ghseq/reference.hpp"

#include <stdexcept>
#include <string>

namespace ghseq::reference {

namespace {

bool is_two_times_five_power(std::int64_t m) {
    if (m < 10 || m % 2 != 0) return false;
    std::int64_t rest = m / 2;
    while (rest % 5 == 0) rest /= 5;
    return rest == 1;
}

} // namespace

CorrelationSeries ccf_naive(const BipolarSequence& a,
                            const BipolarSequence& b) {
    if (a.size() != b.size())
        throw std::invalid_argument(
            "ccf requires equal lengths, got " + std::to_string(a.size()) +
            " and " + std::to_string(b.size()));
    const std::size_t n = a.size();
    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < n; ++j)
            sum += static_cast<std::int64_t>(a[j]) * b[(j + k) % n];
        values[k] = static_cast<double>(sum) / static_cast<double>(n);
    }
    return CorrelationSeries(std::move(values));
}

std::vector<PeriodReport> composite_bound_sweep_serial(std::int64_t m_max) {
    if (m_max < 2)
        throw std::invalid_argument("sweep needs m_max >= 2");
    std::vector<PeriodReport> reports;
    reports.reserve(static_cast<std::size_t>(m_max - 1));
    for (std::int64_t m = 2; m <= m_max; ++m) {
        PeriodReport report = period_report(GHParams(1, 1, m));
        if (report.period > 6 * static_cast<std::uint64_t>(m))
            throw invariant_error("period bound violated at m = " +
                                  std::to_string(m) + ": period " +
                                  std::to_string(report.period) + " > 6m");
        if (report.bound_tight != is_two_times_five_power(m))
            throw invariant_error(
                "period bound tightness mismatch at m = " + std::to_string(m));
        reports.push_back(report);
    }
    return reports;
}

std::vector<PeriodReport> theorem_sweep_serial(std::int64_t p_max,
                                               std::int64_t seed_a,
                                               std::int64_t seed_b) {
    if (p_max < 3)
        throw std::invalid_argument("theorem sweep needs p_max >= 3");
    std::vector<PeriodReport> reports;
    for (std::int64_t p : primes_in_range(3, p_max))
        reports.push_back(verify_period_theorem(p, seed_a, seed_b));
    return reports;
}

} // namespace ghseq::reference
