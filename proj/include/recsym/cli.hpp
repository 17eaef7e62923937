#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recsym {

/// Exit codes: 0 success or expected outcome, 1 verification failure,
/// 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Machine output
/// goes to `out`, diagnostics to `err`. RECSYM_SEED supplies the default seed.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace recsym
