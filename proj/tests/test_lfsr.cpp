#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ghseq/lfsr.hpp"

using namespace ghseq;

namespace {

BinaryPolynomial poly_from_mask_bits(std::uint64_t mask) {
    std::vector<unsigned> exponents;
    for (unsigned e = 0; e < 64; ++e)
        if ((mask >> e) & 1) exponents.push_back(e);
    return BinaryPolynomial(exponents);
}

// Ascending-mask scan; every feedback polynomial needs the constant term.
std::vector<BinaryPolynomial> first_irreducibles(unsigned degree,
                                                 std::size_t count) {
    std::vector<BinaryPolynomial> out;
    const std::uint64_t top = std::uint64_t{1} << degree;
    for (std::uint64_t inner = 0; inner < top && out.size() < count;
         inner += 2) {
        const BinaryPolynomial poly = poly_from_mask_bits(top | inner | 1);
        if (is_irreducible(poly)) out.push_back(poly);
    }
    return out;
}

BinaryPolynomial first_primitive(unsigned degree) {
    const std::uint64_t target = (std::uint64_t{1} << degree) - 1;
    const std::uint64_t top = std::uint64_t{1} << degree;
    for (std::uint64_t inner = 0; inner < top; inner += 2) {
        const BinaryPolynomial poly = poly_from_mask_bits(top | inner | 1);
        if (is_irreducible(poly) && poly_order(poly) == target) return poly;
    }
    throw std::logic_error("no primitive polynomial found");
}

std::vector<std::uint8_t> rotated(const std::vector<std::uint8_t>& bits,
                                  std::size_t shift) {
    std::vector<std::uint8_t> out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        out[i] = bits[(i + shift) % bits.size()];
    return out;
}

} // namespace

TEST_CASE("polynomial text format round trips") {
    const BinaryPolynomial poly = BinaryPolynomial::parse("45,4,3,1,0");
    CHECK(poly.degree() == 45);
    CHECK(poly.has_constant_term());
    CHECK(poly.has_term(4));
    CHECK_FALSE(poly.has_term(2));
    CHECK(poly.to_string() == "45,4,3,1,0");
    CHECK(poly == BinaryPolynomial(std::vector<unsigned>{0, 1, 3, 4, 45}));

    CHECK(BinaryPolynomial::parse(" 3 , 1 , 0 ").to_string() == "3,1,0");
    CHECK_THROWS_AS(BinaryPolynomial::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(BinaryPolynomial::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(BinaryPolynomial::parse("3,,0"), std::invalid_argument);
    CHECK_THROWS_AS(BinaryPolynomial::parse("3,3,0"), std::invalid_argument);
    CHECK_THROWS_AS(BinaryPolynomial::parse("0"), std::invalid_argument);
    CHECK_THROWS_AS(BinaryPolynomial::parse("64,0"), std::invalid_argument);
    CHECK_THROWS_AS(BinaryPolynomial::parse("-3,0"), std::invalid_argument);
}

TEST_CASE("seed parsing") {
    CHECK(parse_bits("10110") ==
          std::vector<std::uint8_t>{1, 0, 1, 1, 0});
    CHECK(format_bits(parse_bits("0011")) == "0011");
    CHECK(all_ones_seed(3) == std::vector<std::uint8_t>{1, 1, 1});
    CHECK_THROWS_AS(parse_bits(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_bits("102"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bits("1 1"), std::invalid_argument);
}

TEST_CASE("register bit stream golden values") {
    const BinaryPolynomial poly = BinaryPolynomial::parse("3,1,0");
    const auto seed = parse_bits("111");
    CHECK(format_bits(lfsr_bits(poly, seed, 7)) == "1110010");
    CHECK(format_bits(lfsr_bits(poly, seed, 14)) == "11100101110010");

    const BinaryPolynomial degree_one = BinaryPolynomial::parse("1,0");
    CHECK(format_bits(lfsr_bits(degree_one, parse_bits("1"), 4)) == "1111");
}

TEST_CASE("register rejects bad seeds and polynomials") {
    const BinaryPolynomial poly = BinaryPolynomial::parse("3,1,0");
    CHECK_THROWS_AS(Lfsr(poly, parse_bits("000")), std::invalid_argument);
    CHECK_THROWS_AS(Lfsr(poly, parse_bits("11")), std::invalid_argument);
    CHECK_THROWS_AS(Lfsr(poly, parse_bits("1111")), std::invalid_argument);
    // x^3 + x has no constant term: the step map would not be invertible.
    CHECK_THROWS_AS(Lfsr(BinaryPolynomial(std::vector<unsigned>{3, 1}),
                         parse_bits("111")),
                    std::invalid_argument);
}

TEST_CASE("fragments map bits to bipolar values") {
    const BinaryPolynomial poly = BinaryPolynomial::parse("3,1,0");
    const auto seed = parse_bits("111");
    CHECK(pn_fragment(poly, seed, 0, 3) == BipolarSequence({-1, -1, -1}));
    CHECK(pn_fragment(poly, seed, 3, 2) == BipolarSequence({1, 1}));
    CHECK(format_bipolar(pn_fragment(poly, seed, 0, 7)) ==
          "-1,-1,-1,+1,+1,-1,+1");
}

TEST_CASE("direct state walk finds the period") {
    CHECK(sequence_period(BinaryPolynomial::parse("3,1,0"),
                          parse_bits("111")) == 7);
    CHECK(sequence_period(BinaryPolynomial::parse("4,1,0"),
                          parse_bits("1000")) == 15);
    CHECK(sequence_period(BinaryPolynomial::parse("2,1,0"),
                          parse_bits("11")) == 3);
    CHECK_THROWS_AS(sequence_period(BinaryPolynomial::parse("25,3,0"),
                                    all_ones_seed(25)),
                    std::invalid_argument);
}

TEST_CASE("irreducibility over gf(2)") {
    CHECK(is_irreducible(BinaryPolynomial::parse("3,1,0")));
    CHECK(is_irreducible(BinaryPolynomial::parse("4,3,2,1,0")));
    CHECK_FALSE(is_irreducible(BinaryPolynomial::parse("4,2,0"))); // (x²+x+1)²
    CHECK_FALSE(is_irreducible(BinaryPolynomial::parse("2,0")));   // (x+1)²
    CHECK_FALSE(is_irreducible(BinaryPolynomial::parse("3,2,1,0"))); // has x+1
    CHECK(is_irreducible(BinaryPolynomial::parse("1,0")));
}

TEST_CASE("order of x modulo the polynomial") {
    CHECK(poly_order(BinaryPolynomial::parse("3,1,0")) == 7);
    // Irreducible but not primitive: order 5 < 2^4 - 1.
    CHECK(poly_order(BinaryPolynomial::parse("4,3,2,1,0")) == 5);

    CHECK_THROWS_WITH_AS(poly_order(BinaryPolynomial::parse("4,2,0")),
                         doctest::Contains("divides"), std::invalid_argument);
    CHECK_THROWS_AS(poly_order(BinaryPolynomial(std::vector<unsigned>{3, 1})),
                    std::invalid_argument);
}

TEST_CASE("both default degree-45 generators are maximal length") {
    CHECK(poly_order(BinaryPolynomial::parse("45,4,3,1,0")) ==
          35184372088831ull);
    CHECK(poly_order(BinaryPolynomial::parse("45,5,4,2,0")) ==
          35184372088831ull);
}

TEST_CASE("mersenne factorizations") {
    CHECK(factor_mersenne(4) == std::vector<std::uint64_t>{3, 5});
    CHECK(factor_mersenne(11) == std::vector<std::uint64_t>{23, 89});
    CHECK(factor_mersenne(1).empty());
    CHECK(factor_mersenne(2) == std::vector<std::uint64_t>{3});
    CHECK(factor_mersenne(6) == std::vector<std::uint64_t>{3, 3, 7});

    const auto f45 = factor_mersenne(45);
    CHECK(f45 == std::vector<std::uint64_t>{7, 31, 73, 151, 631, 23311});
    const std::uint64_t product = std::accumulate(
        f45.begin(), f45.end(), std::uint64_t{1},
        [](std::uint64_t acc, std::uint64_t p) { return acc * p; });
    CHECK(product == 35184372088831ull);

    CHECK_THROWS_AS(factor_mersenne(0), std::invalid_argument);
    CHECK_THROWS_AS(factor_mersenne(61), std::invalid_argument);
}

TEST_CASE("order matches direct simulation for small irreducibles") {
    for (unsigned degree = 2; degree <= 16; ++degree) {
        for (const BinaryPolynomial& poly : first_irreducibles(degree, 3)) {
            CAPTURE(poly.to_string());
            CHECK(poly_order(poly) ==
                  sequence_period(poly, all_ones_seed(degree)));
        }
    }
}

TEST_CASE("maximal length sequences are balanced") {
    for (unsigned degree = 2; degree <= 16; ++degree) {
        const BinaryPolynomial poly = first_primitive(degree);
        CAPTURE(poly.to_string());
        const std::uint64_t period = (std::uint64_t{1} << degree) - 1;
        const auto bits = lfsr_bits(poly, all_ones_seed(degree),
                                    static_cast<std::size_t>(period));
        const auto ones = static_cast<std::uint64_t>(
            std::count(bits.begin(), bits.end(), std::uint8_t{1}));
        CHECK(ones == std::uint64_t{1} << (degree - 1));
        CHECK(period - ones == (std::uint64_t{1} << (degree - 1)) - 1);
    }
}

TEST_CASE("non-zero registers never reach the zero state") {
    // Exhaustive over every feedback polynomial with constant term and every
    // non-zero register, small degrees.
    std::vector<std::uint8_t> seed;
    for (unsigned degree = 1; degree <= 8; ++degree) {
        const std::uint64_t top = std::uint64_t{1} << degree;
        for (std::uint64_t inner = 0; inner < top; inner += 2) {
            const BinaryPolynomial poly = poly_from_mask_bits(top | inner | 1);
            for (std::uint64_t state = 1; state < top; ++state) {
                seed.assign(degree, 0);
                for (unsigned i = 0; i < degree; ++i)
                    seed[i] = (state >> (degree - 1 - i)) & 1;
                Lfsr lfsr(poly, seed);
                lfsr.step();
                CHECK(lfsr.state() != 0);
            }
        }
    }
}

TEST_CASE("xor of an m-sequence with its shift is another shift") {
    for (unsigned degree : {3u, 4u, 5u, 6u, 8u}) {
        const BinaryPolynomial poly = first_primitive(degree);
        const std::size_t period = (std::size_t{1} << degree) - 1;
        const auto bits = lfsr_bits(poly, all_ones_seed(degree), period);
        const std::vector<std::size_t> shifts =
            degree <= 6 ? [&] {
                std::vector<std::size_t> all(period - 1);
                std::iota(all.begin(), all.end(), std::size_t{1});
                return all;
            }()
                        : std::vector<std::size_t>{1, 2, 3, 50, period - 1};
        for (std::size_t shift : shifts) {
            const auto shifted = rotated(bits, shift);
            std::vector<std::uint8_t> sum(period);
            for (std::size_t i = 0; i < period; ++i)
                sum[i] = bits[i] ^ shifted[i];
            bool is_some_shift = false;
            for (std::size_t u = 0; u < period && !is_some_shift; ++u)
                is_some_shift = (sum == rotated(bits, u));
            CHECK(is_some_shift);
        }
    }
}
