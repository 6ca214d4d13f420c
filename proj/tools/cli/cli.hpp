#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace homeguard::cli {

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Entry point behind the `homeguard` binary. `args` excludes argv[0].
/// Results go to `out`; diagnostics and usage text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homeguard::cli
