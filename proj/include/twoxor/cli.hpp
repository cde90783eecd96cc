#pragma once

#include <iosfwd>

namespace twoxor {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `twoxor` command line. Writes CSV or reports to `out`
/// (unless --out redirects it) and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twoxor
