#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilhodge::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidInput = 1;
inline constexpr int kBudgetExceeded = 2;

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilhodge::cli
