#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ghseq {

// Finite sequence over {+1, -1}. Common currency of the prime-class
// sequence B(n), PN sequence fragments and the correlation routines.
class BipolarSequence {
public:
    // Validates: non-empty, every element exactly +1 or -1.
    explicit BipolarSequence(std::vector<std::int8_t> values);

    // Bit b maps to 1 - 2b: 0 -> +1, 1 -> -1.
    static BipolarSequence from_bits(std::span<const std::uint8_t> bits);

    std::size_t size() const { return values_.size(); }
    std::int8_t operator[](std::size_t i) const { return values_[i]; }
    std::span<const std::int8_t> values() const { return values_; }

    // Elements [offset, offset + length); throws if the window overruns.
    BipolarSequence window(std::size_t offset, std::size_t length) const;

    // Cyclic left rotation by `shift` positions.
    BipolarSequence rotated(std::size_t shift) const;

    BipolarSequence negated() const;

    bool operator==(const BipolarSequence&) const = default;

private:
    std::vector<std::int8_t> values_;
};

// "+1,-1,+1" form used by the CLI `bn` and `pn` subcommands.
std::string format_bipolar(const BipolarSequence& seq);

} // namespace ghseq
