#include "ghseq/gh_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ghseq {
namespace {

std::int64_t reduce(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

// m = 2 * 5^n for some n >= 1; exactly the moduli where N(m) = 6m.
bool is_two_times_five_power(std::int64_t m) {
    if (m < 10 || m % 2 != 0) return false;
    std::int64_t q = m / 2;
    while (q % 5 == 0) q /= 5;
    return q == 1;
}

} // namespace

GHParams::GHParams(std::int64_t a, std::int64_t b, std::int64_t m)
    : a_(a), b_(b), m_(m) {
    if (m < 2) throw std::invalid_argument("GH modulus must be >= 2");
    if (m > kMaxModulus)
        throw std::invalid_argument("GH modulus exceeds the 2^31-1 cap");
    r0_ = reduce(a, m);
    r1_ = reduce(b, m);
    if (r0_ == 0 && r1_ == 0)
        throw std::invalid_argument(
            "degenerate GH seeds: (a mod m, b mod m) = (0, 0)");
}

const char* to_label(PeriodClass cls) {
    switch (cls) {
    case PeriodClass::DividesPMinusOne: return "pm1";
    case PeriodClass::DividesTwoPPlusTwo: return "2pp2";
    case PeriodClass::SpecialFive: return "special5";
    }
    return "?";
}

std::string to_csv_row(const PeriodReport& report) {
    std::ostringstream out;
    out << report.modulus << ',' << report.period << ','
        << (report.period_class ? to_label(*report.period_class) : "nonprime")
        << ',' << (report.bound_tight ? 1 : 0);
    return out.str();
}

std::vector<std::int64_t> gh_residues(const GHParams& params,
                                      std::size_t count) {
    if (count == 0) throw std::invalid_argument("residue count must be >= 1");
    std::vector<std::int64_t> out;
    out.reserve(count);
    out.push_back(params.r0());
    if (count == 1) return out;
    out.push_back(params.r1());
    const std::int64_t m = params.m();
    for (std::size_t k = 2; k < count; ++k) {
        std::int64_t next = out[k - 1] + out[k - 2];
        if (next >= m) next -= m;
        out.push_back(next);
    }
    return out;
}

std::uint64_t gh_period(const GHParams& params) {
    const std::uint64_t m = static_cast<std::uint64_t>(params.m());
    const std::uint64_t r0 = static_cast<std::uint64_t>(params.r0());
    const std::uint64_t r1 = static_cast<std::uint64_t>(params.r1());
    // Pigeonhole cap: at most m^2 - 1 distinct non-zero pairs, and the step
    // map is invertible so the orbit is a pure cycle (in fact N <= 6m).
    const std::uint64_t cap = m * m;
    std::uint64_t s0 = r0, s1 = r1;
    for (std::uint64_t n = 1; n <= cap; ++n) {
        std::uint64_t next = s0 + s1;
        if (next >= m) next -= m;
        s0 = s1;
        s1 = next;
        if (s0 == r0 && s1 == r1) return n;
    }
    throw std::logic_error("gh_period: no recurrence within m^2 iterations");
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

PeriodClass classify_prime(std::int64_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("classify_prime: " + std::to_string(p) +
                                    " is not prime");
    if (p == 2)
        throw std::invalid_argument(
            "classify_prime: p = 2 is outside the last-digit rules");
    if (p == 5) return PeriodClass::SpecialFive;
    switch (p % 10) {
    case 1:
    case 9: return PeriodClass::DividesPMinusOne;
    case 3:
    case 7: return PeriodClass::DividesTwoPPlusTwo;
    }
    throw std::logic_error("classify_prime: unreachable last digit");
}

PeriodReport verify_period_theorem(std::int64_t p, std::int64_t seed_a,
                                   std::int64_t seed_b) {
    const PeriodClass cls = classify_prime(p);
    const GHParams params(seed_a, seed_b, p);
    const std::uint64_t period = gh_period(params);

    std::uint64_t target = 0;
    switch (cls) {
    case PeriodClass::DividesPMinusOne:
        target = static_cast<std::uint64_t>(p - 1);
        break;
    case PeriodClass::DividesTwoPPlusTwo:
        target = static_cast<std::uint64_t>(2 * p + 2);
        break;
    case PeriodClass::SpecialFive:
        target = 20;
        break;
    }
    if (period == 0 || target % period != 0) {
        std::ostringstream msg;
        msg << "period theorem violated for p=" << p << ": period " << period
            << " does not divide " << target << " (class "
            << to_label(cls) << ")";
        throw invariant_error(msg.str());
    }

    PeriodReport report;
    report.modulus = p;
    report.period = period;
    report.period_class = cls;
    report.bound_tight = period == 6 * static_cast<std::uint64_t>(p);
    return report;
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
    if (lo < 2 || lo > hi)
        throw std::invalid_argument("primes_in_range requires 2 <= lo <= hi");
    // Plain sieve; desk-scale ranges only.
    if (hi > 100'000'000)
        throw std::invalid_argument("primes_in_range: upper bound too large");
    std::vector<std::uint8_t> composite(static_cast<std::size_t>(hi) + 1, 0);
    for (std::int64_t d = 2; d * d <= hi; ++d) {
        if (composite[static_cast<std::size_t>(d)]) continue;
        for (std::int64_t k = d * d; k <= hi; k += d)
            composite[static_cast<std::size_t>(k)] = 1;
    }
    std::vector<std::int64_t> primes;
    for (std::int64_t n = std::max<std::int64_t>(lo, 2); n <= hi; ++n) {
        if (!composite[static_cast<std::size_t>(n)]) primes.push_back(n);
    }
    return primes;
}

BipolarSequence b_sequence(std::size_t count) {
    if (count == 0) throw std::invalid_argument("b_sequence count must be >= 1");
    std::vector<std::int8_t> values;
    values.reserve(count);
    // Sieve in growing windows until enough classifiable primes turned up.
    std::int64_t hi = 64;
    while (true) {
        const double n = static_cast<double>(count) + 2;
        const double est = n * (std::log(n) + std::log(std::log(n + 2)) + 2);
        hi = std::max<std::int64_t>(hi, static_cast<std::int64_t>(est));
        values.clear();
        for (std::int64_t p : primes_in_range(3, hi)) {
            if (p == 5) continue;
            values.push_back(
                classify_prime(p) == PeriodClass::DividesPMinusOne ? 1 : -1);
            if (values.size() == count) return BipolarSequence(values);
        }
        hi *= 2;
    }
}

PeriodReport period_report(const GHParams& params) {
    PeriodReport report;
    report.modulus = params.m();
    report.period = gh_period(params);
    if (is_prime(params.m()) && params.m() != 2)
        report.period_class = classify_prime(params.m());
    report.bound_tight =
        report.period == 6 * static_cast<std::uint64_t>(params.m());
    return report;
}

std::vector<PeriodReport> composite_bound_sweep(std::int64_t m_max) {
    if (m_max < 2)
        throw std::invalid_argument("composite_bound_sweep requires m_max >= 2");
    const std::size_t n = static_cast<std::size_t>(m_max - 1);
    std::vector<PeriodReport> reports(n);

#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t m = 2; m <= m_max; ++m) {
        reports[static_cast<std::size_t>(m - 2)] =
            period_report(GHParams(1, 1, m));
    }

    for (const PeriodReport& r : reports) {
        const std::uint64_t bound = 6 * static_cast<std::uint64_t>(r.modulus);
        if (r.period > bound) {
            std::ostringstream msg;
            msg << "composite bound violated: N(" << r.modulus << ") = "
                << r.period << " > " << bound;
            throw invariant_error(msg.str());
        }
        if (r.bound_tight != is_two_times_five_power(r.modulus)) {
            std::ostringstream msg;
            msg << "tightness mismatch at m = " << r.modulus << ": N = "
                << r.period << ", expected equality exactly at m = 2 * 5^n";
            throw invariant_error(msg.str());
        }
    }
    return reports;
}

std::vector<PeriodReport> theorem_sweep(std::int64_t p_max,
                                        std::int64_t seed_a,
                                        std::int64_t seed_b) {
    if (p_max < 3)
        throw std::invalid_argument("theorem_sweep requires p_max >= 3");
    const std::vector<std::int64_t> primes = primes_in_range(3, p_max);
    std::vector<PeriodReport> reports(primes.size());
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0; i < primes.size(); ++i) {
        try {
            reports[i] = verify_period_theorem(primes[i], seed_a, seed_b);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return reports;
}

} // namespace ghseq
