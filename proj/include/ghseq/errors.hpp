#pragma once

#include <stdexcept>

namespace ghseq {

// A mathematical invariant failed at runtime (period-theorem divisibility,
// the 6m composite bound, ...). Distinct from std::invalid_argument so the
// CLI can map usage errors to exit 1 and invariant violations to exit 2.
class invariant_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ghseq
