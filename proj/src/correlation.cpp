#include "ghseq/correlation.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ghseq {

CorrelationSeries::CorrelationSeries(std::vector<double> values)
    : values_(std::move(values)) {
    if (values_.empty())
        throw std::invalid_argument("correlation series must be non-empty");
    for (double v : values_) {
        if (!(std::fabs(v) <= 1.0))
            throw std::invalid_argument(
                "correlation values must lie within [-1, +1]");
    }
}

CorrelationSeries ccf(const BipolarSequence& a, const BipolarSequence& b) {
    if (a.size() != b.size())
        throw std::invalid_argument(
            "ccf requires equal lengths, got " + std::to_string(a.size()) +
            " and " + std::to_string(b.size()));
    const std::size_t n = a.size();
    const std::int8_t* pa = a.values().data();
    const std::int8_t* pb = b.values().data();
    std::vector<double> values(n);

#pragma omp parallel for schedule(static)
    for (std::size_t k = 0; k < n; ++k) {
        // b index j+k wraps once at j = n-k; split the sum there instead of
        // paying a modulo per element.
        std::int64_t sum = 0;
        const std::size_t split = n - k;
        for (std::size_t j = 0; j < split; ++j)
            sum += static_cast<std::int64_t>(pa[j]) * pb[j + k];
        for (std::size_t j = split; j < n; ++j)
            sum += static_cast<std::int64_t>(pa[j]) * pb[j + k - n];
        values[k] = static_cast<double>(sum) / static_cast<double>(n);
    }
    return CorrelationSeries(std::move(values));
}

double peak_ccf(const CorrelationSeries& series, bool exclude_zero_lag) {
    const std::size_t n = series.size();
    if (exclude_zero_lag && n < 2)
        throw std::invalid_argument(
            "peak over non-zero lags needs at least 2 lags");
    double peak = 0.0;
    for (std::size_t k = exclude_zero_lag ? 1 : 0; k < n; ++k)
        peak = std::max(peak, std::fabs(series[k]));
    return peak;
}

double raw_max_ccf(const CorrelationSeries& series, bool exclude_zero_lag) {
    const std::size_t n = series.size();
    if (exclude_zero_lag && n < 2)
        throw std::invalid_argument(
            "peak over non-zero lags needs at least 2 lags");
    double peak = -1.0;
    for (std::size_t k = exclude_zero_lag ? 1 : 0; k < n; ++k)
        peak = std::max(peak, series[k]);
    return peak;
}

double randomness_measure(const CorrelationSeries& series) {
    const std::size_t n = series.size();
    if (n < 2)
        throw std::invalid_argument(
            "randomness measure needs at least 2 lags");
    double sidelobe_sum = 0.0;
    for (std::size_t k = 1; k < n; ++k) sidelobe_sum += std::fabs(series[k]);
    return 1.0 - sidelobe_sum / static_cast<double>(n - 1);
}

std::string format_fixed6(double value) {
    // glibc converts the exact binary value and resolves decimal ties to the
    // even digit under the default rounding mode.
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

void write_series_csv(std::ostream& out, const CorrelationSeries& series,
                      std::string_view comments) {
    if (!comments.empty()) out << comments;
    out << "lag,ccf\n";
    for (std::size_t k = 0; k < series.size(); ++k)
        out << k << ',' << format_fixed6(series[k]) << '\n';
}

} // namespace ghseq
