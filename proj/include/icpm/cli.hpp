#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace icpm::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int { kAffirmative = 0, kNegative = 1, kInputError = 2, kBudgetExceeded = 3 };

/// Runs one command line (args excludes the program name). Writes a single
/// JSON document to out on success and diagnostics to err.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace icpm::cli
