#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ghseq/bipolar.hpp"

namespace ghseq {

// GF(2) polynomial stored as a coefficient bit mask (bit e = coefficient of
// x^e). Degree 1..63. Text form is comma-separated descending exponents,
// e.g. "45,4,3,1,0" for x^45 + x^4 + x^3 + x + 1.
class BinaryPolynomial {
public:
    explicit BinaryPolynomial(const std::vector<unsigned>& exponents);

    static BinaryPolynomial parse(std::string_view text);
    std::string to_string() const;

    unsigned degree() const { return degree_; }
    bool has_constant_term() const { return (mask_ & 1u) != 0; }
    bool has_term(unsigned exponent) const;
    std::uint64_t coeff_mask() const { return mask_; }

    bool operator==(const BinaryPolynomial&) const = default;

private:
    BinaryPolynomial(std::uint64_t mask, unsigned degree)
        : mask_(mask), degree_(degree) {}

    std::uint64_t mask_ = 0;
    unsigned degree_ = 0;

    friend BinaryPolynomial polynomial_from_mask(std::uint64_t mask);
};

// Internal-use factory for polynomial arithmetic results.
BinaryPolynomial polynomial_from_mask(std::uint64_t mask);

// "10110" -> {1,0,1,1,0}. Throws on characters other than 0/1 or empty input.
std::vector<std::uint8_t> parse_bits(std::string_view text);
std::string format_bits(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> all_ones_seed(unsigned degree);

// Fibonacci-configuration shift register. The seed lists stages most
// significant first; each step emits the last stage, shifts the register
// toward it, and feeds the XOR of the tap stages (the polynomial's non-zero
// exponents below the degree) into the first stage.
class Lfsr {
public:
    // Seed must be non-zero with length equal to the polynomial degree, and
    // the polynomial needs its constant term (keeps the step invertible).
    Lfsr(BinaryPolynomial poly, std::span<const std::uint8_t> seed);

    std::uint8_t step();
    std::uint64_t state() const { return state_; }
    const BinaryPolynomial& poly() const { return poly_; }

private:
    BinaryPolynomial poly_;
    std::uint64_t state_;
    std::uint64_t tap_mask_;
    std::uint64_t state_mask_;
};

// First `count` output bits for the given polynomial and seed.
std::vector<std::uint8_t> lfsr_bits(const BinaryPolynomial& poly,
                                    std::span<const std::uint8_t> seed,
                                    std::size_t count);

// Output bits [offset, offset + length) mapped 0 -> +1, 1 -> -1.
BipolarSequence pn_fragment(const BinaryPolynomial& poly,
                            std::span<const std::uint8_t> seed,
                            std::size_t offset, std::size_t length);

// Smallest t >= 1 returning the register to its seed state, by direct state
// walk. Degree capped at 24; use poly_order for longer registers.
std::uint64_t sequence_period(const BinaryPolynomial& poly,
                              std::span<const std::uint8_t> seed);

bool is_irreducible(const BinaryPolynomial& poly);

// Multiplicative order of x in GF(2)[x]/(poly): smallest e with x^e = 1.
// Requires an irreducible polynomial with constant term; a reducible input
// raises std::invalid_argument naming a nontrivial factor. Equals
// 2^degree - 1 exactly for primitive polynomials (the m-sequence period).
std::uint64_t poly_order(const BinaryPolynomial& poly);

// Prime factors of 2^degree - 1 with multiplicity, ascending, by trial
// division. Degree 1..60 (2^1 - 1 factors to the empty multiset).
std::vector<std::uint64_t> factor_mersenne(unsigned degree);

} // namespace ghseq
