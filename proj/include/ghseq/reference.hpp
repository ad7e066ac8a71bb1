#pragma once

#include <cstdint>
#include <vector>

#include "ghseq/correlation.hpp"
#include "ghseq/gh_core.hpp"

// Serial reference implementations of the parallel kernels. Kept as an
// independent path for the test suites and the benchmark; none of these call
// into the OpenMP versions.
namespace ghseq::reference {

// Naive double loop with explicit (j + k) mod N indexing.
CorrelationSeries ccf_naive(const BipolarSequence& a, const BipolarSequence& b);

// Plain loops over modulus / prime, same result order as the parallel sweeps.
std::vector<PeriodReport> composite_bound_sweep_serial(std::int64_t m_max);
std::vector<PeriodReport> theorem_sweep_serial(std::int64_t p_max,
                                               std::int64_t seed_a = 1,
                                               std::int64_t seed_b = 1);

} // namespace ghseq::reference
