#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace proxima {

/// Exit codes: 0 success / verdict holds, 1 verdict fails or solve did not
/// converge, 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdictFail = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `proxima` command line, writing to the given streams.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace proxima
