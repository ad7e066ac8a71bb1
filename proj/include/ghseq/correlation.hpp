#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ghseq/bipolar.hpp"

namespace ghseq {

// Periodic cross-correlation values per lag k in [0, N). Values from ccf()
// are exact: the integer product sum divided once by N.
class CorrelationSeries {
public:
    // Validates: non-empty, every value within [-1, +1].
    explicit CorrelationSeries(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

// CCF(k) = (1/N) sum_j a_j * b_{(j+k) mod N}, circular over equal lengths.
// Integer accumulation per lag, one final division. Lags are independent and
// computed OpenMP-parallel.
CorrelationSeries ccf(const BipolarSequence& a, const BipolarSequence& b);

// Maximum |value| over lags [1, N) when exclude_zero_lag (self-correlation
// sidelobes) or [0, N) otherwise (distinct-fragment cross-correlation).
double peak_ccf(const CorrelationSeries& series, bool exclude_zero_lag);

// Signed maximum over the same admissible lags, for sensitivity checks
// against the absolute-value peak.
double raw_max_ccf(const CorrelationSeries& series, bool exclude_zero_lag);

// R = 1 - (sum_{k=1}^{N-1} |value[k]|) / (N-1). 1 for an ideal delta
// correlation, 0 for the self-correlation of a constant sequence.
double randomness_measure(const CorrelationSeries& series);

// "lag,ccf" header then one row per lag, ccf with exactly 6 decimals.
// Optional comment lines ("# ...") go before the header.
void write_series_csv(std::ostream& out, const CorrelationSeries& series,
                      std::string_view comments = {});

// Fixed-width decimal used by every CSV writer: 6 decimals, half-to-even.
std::string format_fixed6(double value);

} // namespace ghseq
