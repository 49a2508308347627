// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>

namespace copo::cli {

/// Exit codes: detector verdicts map to 0 (copositive/stable),
/// 1 (not copositive/unstable), 2 (undecided); 64 flags a usage error and
/// 66 an unreadable or invalid input file.
inline constexpr int kExitUsage = 64;
inline constexpr int kExitBadInput = 66;

/// Run the command-line front end (subcommands: check, coclique, vacuum,
/// bench) against the given argv. Reports go to `out`, diagnostics to
/// `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace copo::cli
