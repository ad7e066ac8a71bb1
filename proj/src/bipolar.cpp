#include "ghseq/bipolar.hpp"

#include <stdexcept>

namespace ghseq {

BipolarSequence::BipolarSequence(std::vector<std::int8_t> values)
    : values_(std::move(values)) {
    if (values_.empty())
        throw std::invalid_argument("bipolar sequence must be non-empty");
    for (std::int8_t v : values_) {
        if (v != 1 && v != -1)
            throw std::invalid_argument(
                "bipolar sequence elements must be +1 or -1");
    }
}

BipolarSequence BipolarSequence::from_bits(
    std::span<const std::uint8_t> bits) {
    std::vector<std::int8_t> values;
    values.reserve(bits.size());
    for (std::uint8_t b : bits)
        values.push_back(static_cast<std::int8_t>(1 - 2 * (b & 1)));
    return BipolarSequence(std::move(values));
}

BipolarSequence BipolarSequence::window(std::size_t offset,
                                        std::size_t length) const {
    if (length == 0) throw std::invalid_argument("window length must be >= 1");
    if (offset + length > values_.size())
        throw std::invalid_argument("window [" + std::to_string(offset) + ", " +
                                    std::to_string(offset + length) +
                                    ") overruns sequence of length " +
                                    std::to_string(values_.size()));
    return BipolarSequence(std::vector<std::int8_t>(
        values_.begin() + static_cast<std::ptrdiff_t>(offset),
        values_.begin() + static_cast<std::ptrdiff_t>(offset + length)));
}

BipolarSequence BipolarSequence::rotated(std::size_t shift) const {
    const std::size_t n = values_.size();
    std::vector<std::int8_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = values_[(i + shift) % n];
    return BipolarSequence(std::move(out));
}

BipolarSequence BipolarSequence::negated() const {
    std::vector<std::int8_t> out(values_);
    for (std::int8_t& v : out) v = static_cast<std::int8_t>(-v);
    return BipolarSequence(std::move(out));
}

std::string format_bipolar(const BipolarSequence& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i != 0) out += ',';
        out += seq[i] > 0 ? "+1" : "-1";
    }
    return out;
}

} // namespace ghseq
