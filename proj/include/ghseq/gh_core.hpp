#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghseq/bipolar.hpp"
#include "ghseq/errors.hpp"

namespace ghseq {

// Arithmetic stays exact on 64-bit intermediates as long as a residue sum
// cannot overflow, hence the modulus cap.
inline constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

// Seed pair (a, b) and modulus m of a GH residue sequence
// G(n) = G(n-1) + G(n-2) mod m.
class GHParams {
public:
    // Throws std::invalid_argument for m < 2, m > kMaxModulus, or the
    // degenerate all-zero seed pair (a mod m, b mod m) = (0, 0).
    GHParams(std::int64_t a, std::int64_t b, std::int64_t m);

    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t m() const { return m_; }

    // Seeds reduced into [0, m).
    std::int64_t r0() const { return r0_; }
    std::int64_t r1() const { return r1_; }

private:
    std::int64_t a_, b_, m_, r0_, r1_;
};

// Period family of a prime modulus:
//   DividesPMinusOne   p mod 10 in {1, 9}  -> period divides p-1
//   DividesTwoPPlusTwo p mod 10 in {3, 7}  -> period divides 2p+2
//   SpecialFive        p = 5               -> period 20 for seeds (1,1)
enum class PeriodClass { DividesPMinusOne, DividesTwoPPlusTwo, SpecialFive };

// CSV labels: pm1 / 2pp2 / special5.
const char* to_label(PeriodClass cls);

struct PeriodReport {
    std::int64_t modulus = 0;
    std::uint64_t period = 0;
    // Set for primes the classification covers; empty for composites and
    // for p = 2 (no last-digit rule applies to it).
    std::optional<PeriodClass> period_class;
    bool bound_tight = false; // period == 6 * modulus
};

// "modulus,period,class,bound_tight" with class in
// {pm1, 2pp2, special5, nonprime} and bound_tight as 0/1.
std::string to_csv_row(const PeriodReport& report);
inline constexpr const char* kPeriodCsvHeader = "modulus,period,class,bound_tight";

// First `count` residues: a mod m, b mod m, then the recurrence.
std::vector<std::int64_t> gh_residues(const GHParams& params, std::size_t count);

// Smallest N >= 1 with (r_N, r_{N+1}) = (r_0, r_1). Linear scan of the pair
// stream; the pair space is finite and the step map is invertible, so the
// scan terminates within m*m steps (and in practice within 6m).
std::uint64_t gh_period(const GHParams& params);

bool is_prime(std::int64_t n);

// Throws std::invalid_argument for composites and for p = 2.
PeriodClass classify_prime(std::int64_t p);

// Computes the period for (seed_a, seed_b) mod p, classifies p, and checks
// the divisibility the classification demands. Throws invariant_error when
// the check fails (which signals a bug: it cannot happen for seeds (1,1)).
PeriodReport verify_period_theorem(std::int64_t p, std::int64_t seed_a,
                                   std::int64_t seed_b);

// Exactly the primes in [lo, hi], ascending. Requires 2 <= lo <= hi.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

// B(n): ascending primes starting at 3, skipping 5; +1 for class
// DividesPMinusOne, -1 for DividesTwoPPlusTwo.
BipolarSequence b_sequence(std::size_t count);

// Report for a single modulus: period, class when classifiable, 6m tightness.
PeriodReport period_report(const GHParams& params);

// Reports for every m in [2, m_max] with seeds (1,1), in modulus order.
// Checks N(m) <= 6m and that equality holds exactly at m = 2 * 5^n;
// throws invariant_error otherwise. OpenMP-parallel over moduli.
std::vector<PeriodReport> composite_bound_sweep(std::int64_t m_max);

// verify_period_theorem for every prime in [3, p_max], in prime order.
// OpenMP-parallel over primes. Throws invariant_error on any violation.
std::vector<PeriodReport> theorem_sweep(std::int64_t p_max,
                                        std::int64_t seed_a = 1,
                                        std::int64_t seed_b = 1);

} // namespace ghseq
