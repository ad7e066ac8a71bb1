#include "ghseq/lfsr.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace ghseq {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

int poly_degree(u64 mask) { return 63 - std::countl_zero(mask); }

// Carry-less product; operand degrees <= 63, so the result fits 128 bits.
u128 gf2_mul_full(u64 a, u64 b) {
    u128 acc = 0;
    u128 shifted = a;
    while (b) {
        if (b & 1) acc ^= shifted;
        shifted <<= 1;
        b >>= 1;
    }
    return acc;
}

int wide_degree(u128 v) {
    const u64 hi = static_cast<u64>(v >> 64);
    if (hi) return 64 + poly_degree(hi);
    const u64 lo = static_cast<u64>(v);
    return lo ? poly_degree(lo) : -1;
}

u64 gf2_reduce(u128 value, u64 modulus) {
    const int dm = poly_degree(modulus);
    int dv = wide_degree(value);
    while (dv >= dm) {
        value ^= static_cast<u128>(modulus) << (dv - dm);
        dv = wide_degree(value);
    }
    return static_cast<u64>(value);
}

u64 gf2_mulmod(u64 a, u64 b, u64 modulus) {
    return gf2_reduce(gf2_mul_full(a, b), modulus);
}

u64 gf2_mod(u64 a, u64 b) {
    const int db = poly_degree(b);
    while (a) {
        const int da = poly_degree(a);
        if (da < db) break;
        a ^= b << (da - db);
    }
    return a;
}

u64 gf2_gcd(u64 a, u64 b) {
    while (b) {
        const u64 r = gf2_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

// x^exponent mod modulus by square and multiply.
u64 gf2_pow_x(u64 exponent, u64 modulus) {
    u64 result = 1;
    u64 base = gf2_reduce(2, modulus); // x
    while (exponent) {
        if (exponent & 1) result = gf2_mulmod(result, base, modulus);
        base = gf2_mulmod(base, base, modulus);
        exponent >>= 1;
    }
    return result;
}

std::string mask_to_text(u64 mask) {
    std::string out;
    for (int e = poly_degree(mask); e >= 0; --e) {
        if ((mask >> e) & 1) {
            if (!out.empty()) out += ',';
            out += std::to_string(e);
        }
    }
    return out;
}

// Equal-degree split for f = product of >= 2 distinct irreducibles of degree
// k: gcd with the trace polynomial T(h) = h + h^2 + ... + h^(2^(k-1)) of a
// varying h separates the factors.
u64 equal_degree_factor(u64 f, int k) {
    u64 h = 2; // x first, then pseudo-random residues
    u64 rng = 0x9e3779b97f4a7c15ull;
    for (int attempt = 0; attempt < 256; ++attempt) {
        u64 trace = h;
        u64 cur = h;
        for (int i = 1; i < k; ++i) {
            cur = gf2_mulmod(cur, cur, f);
            trace ^= cur;
        }
        for (u64 t : {trace, trace ^ 1}) {
            if (t == 0) continue;
            const u64 g = gf2_gcd(f, t);
            if (g != 1 && g != f) return g;
        }
        rng = rng * 6364136223846793005ull + 1442695040888963407ull;
        h = gf2_mod(rng, f);
        if (h == 0) h = 2;
    }
    throw std::logic_error("equal-degree split failed to separate factors");
}

// Returns 0 when irreducible, otherwise a nontrivial factor mask.
u64 find_factor(u64 f) {
    const int d = poly_degree(f);
    u64 r = 2; // x
    for (int k = 1; 2 * k <= d; ++k) {
        r = gf2_mulmod(r, r, f); // r = x^(2^k) mod f
        const u64 g = gf2_gcd(f, r ^ 2);
        if (g == 1) continue;
        if (g != f) return g;
        // Every irreducible factor has degree exactly k.
        return equal_degree_factor(f, k);
    }
    return 0;
}

} // namespace

BinaryPolynomial polynomial_from_mask(std::uint64_t mask) {
    if (mask < 2)
        throw std::invalid_argument("polynomial degree must be >= 1");
    return BinaryPolynomial(mask, static_cast<unsigned>(poly_degree(mask)));
}

BinaryPolynomial::BinaryPolynomial(const std::vector<unsigned>& exponents) {
    if (exponents.empty())
        throw std::invalid_argument("polynomial needs at least one exponent");
    for (unsigned e : exponents) {
        if (e > 63)
            throw std::invalid_argument("polynomial exponent exceeds 63");
        if ((mask_ >> e) & 1)
            throw std::invalid_argument("duplicate polynomial exponent " +
                                        std::to_string(e));
        mask_ |= std::uint64_t{1} << e;
    }
    degree_ = static_cast<unsigned>(poly_degree(mask_));
    if (degree_ < 1)
        throw std::invalid_argument("polynomial degree must be >= 1");
}

BinaryPolynomial BinaryPolynomial::parse(std::string_view text) {
    std::vector<unsigned> exponents;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
        // trim blanks around the exponent
        const auto first = token.find_first_not_of(" \t");
        const auto last = token.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw std::invalid_argument("empty exponent in polynomial text");
        token = token.substr(first, last - first + 1);
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad polynomial exponent '" + token +
                                        "'");
        }
        if (used != token.size() || value > 63)
            throw std::invalid_argument("bad polynomial exponent '" + token +
                                        "'");
        exponents.push_back(static_cast<unsigned>(value));
    }
    return BinaryPolynomial(exponents);
}

std::string BinaryPolynomial::to_string() const { return mask_to_text(mask_); }

bool BinaryPolynomial::has_term(unsigned exponent) const {
    return exponent <= 63 && ((mask_ >> exponent) & 1) != 0;
}

std::vector<std::uint8_t> parse_bits(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty bit string");
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bit strings may contain only 0 and 1");
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return bits;
}

std::string format_bits(std::span<const std::uint8_t> bits) {
    std::string out;
    out.reserve(bits.size());
    for (std::uint8_t b : bits) out += static_cast<char>('0' + (b & 1));
    return out;
}

std::vector<std::uint8_t> all_ones_seed(unsigned degree) {
    if (degree < 1 || degree > 63)
        throw std::invalid_argument("seed degree out of range");
    return std::vector<std::uint8_t>(degree, 1);
}

Lfsr::Lfsr(BinaryPolynomial poly, std::span<const std::uint8_t> seed)
    : poly_(std::move(poly)) {
    const unsigned d = poly_.degree();
    if (!poly_.has_constant_term())
        throw std::invalid_argument(
            "feedback polynomial needs its constant term");
    if (seed.size() != d)
        throw std::invalid_argument("seed length " + std::to_string(seed.size()) +
                                    " does not match polynomial degree " +
                                    std::to_string(d));
    state_ = 0;
    for (unsigned i = 0; i < d; ++i) {
        if (seed[i] > 1)
            throw std::invalid_argument("seed bits must be 0 or 1");
        state_ |= static_cast<std::uint64_t>(seed[i]) << i;
    }
    if (state_ == 0)
        throw std::invalid_argument("all-zero seed is a fixed point");
    state_mask_ = d == 64 ? ~0ull : (std::uint64_t{1} << d) - 1;
    // Tap exponent e reads stage d-1-e.
    tap_mask_ = 0;
    for (unsigned e = 0; e < d; ++e) {
        if (poly_.has_term(e))
            tap_mask_ |= std::uint64_t{1} << (d - 1 - e);
    }
}

std::uint8_t Lfsr::step() {
    const unsigned d = poly_.degree();
    const std::uint8_t out =
        static_cast<std::uint8_t>((state_ >> (d - 1)) & 1);
    const std::uint64_t feedback =
        static_cast<std::uint64_t>(std::popcount(state_ & tap_mask_) & 1);
    state_ = ((state_ << 1) & state_mask_) | feedback;
    return out;
}

std::vector<std::uint8_t> lfsr_bits(const BinaryPolynomial& poly,
                                    std::span<const std::uint8_t> seed,
                                    std::size_t count) {
    if (count == 0) throw std::invalid_argument("bit count must be >= 1");
    Lfsr reg(poly, seed);
    std::vector<std::uint8_t> bits;
    bits.reserve(count);
    for (std::size_t i = 0; i < count; ++i) bits.push_back(reg.step());
    return bits;
}

BipolarSequence pn_fragment(const BinaryPolynomial& poly,
                            std::span<const std::uint8_t> seed,
                            std::size_t offset, std::size_t length) {
    if (length == 0) throw std::invalid_argument("fragment length must be >= 1");
    const std::vector<std::uint8_t> bits = lfsr_bits(poly, seed, offset + length);
    return BipolarSequence::from_bits(
        std::span<const std::uint8_t>(bits).subspan(offset, length));
}

std::uint64_t sequence_period(const BinaryPolynomial& poly,
                              std::span<const std::uint8_t> seed) {
    if (poly.degree() > 24)
        throw std::invalid_argument(
            "sequence_period walks states directly and is capped at degree "
            "24; use poly_order for longer registers");
    Lfsr reg(poly, seed);
    const std::uint64_t start = reg.state();
    const std::uint64_t bound =
        (std::uint64_t{1} << poly.degree()) - 1;
    for (std::uint64_t t = 1; t <= bound; ++t) {
        reg.step();
        if (reg.state() == start) return t;
    }
    throw std::logic_error(
        "sequence_period: state did not recur within 2^degree - 1 steps");
}

bool is_irreducible(const BinaryPolynomial& poly) {
    return find_factor(poly.coeff_mask()) == 0;
}

std::uint64_t poly_order(const BinaryPolynomial& poly) {
    if (!poly.has_constant_term())
        throw std::invalid_argument(
            "poly_order: polynomial has no constant term, x divides it");
    const u64 f = poly.coeff_mask();
    if (const u64 factor = find_factor(f)) {
        throw std::invalid_argument("poly_order: reducible polynomial; factor " +
                                    mask_to_text(factor) + " divides " +
                                    poly.to_string());
    }
    const unsigned d = poly.degree();
    const u64 group_order = (u64{1} << d) - 1;
    std::vector<u64> primes = factor_mersenne(d);
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    u64 order = group_order;
    for (u64 q : primes) {
        while (order % q == 0 && gf2_pow_x(order / q, f) == 1) order /= q;
    }
    return order;
}

std::vector<std::uint64_t> factor_mersenne(unsigned degree) {
    if (degree < 1 || degree > 60)
        throw std::invalid_argument("factor_mersenne handles degrees 1..60");
    u64 n = (u64{1} << degree) - 1;
    std::vector<u64> factors;
    for (u64 d = 3; d * d <= n; d += 2) {
        while (n % d == 0) {
            factors.push_back(d);
            n /= d;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

} // namespace ghseq
