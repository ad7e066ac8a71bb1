#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ghseq::cli {

// Exit codes: 0 success, 1 usage error, 2 invariant violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvariant = 2;

// Full command-line front end; `args` excludes the program name. Streams are
// injected so tests can run subcommands in-process.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace ghseq::cli
