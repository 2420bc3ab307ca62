#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cellalg::cli {

// Exit codes.  The mathematical answer is never encoded in the exit code.
inline constexpr int kOk = 0;
inline constexpr int kSyntaxOrIo = 1;
inline constexpr int kInvalidSpec = 2;
inline constexpr int kBudgetExceeded = 3;
inline constexpr int kInternalError = 4;

/// Runs one CLI invocation.  `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Sets the default Gröbner budget from CELLALG_GB_MAX_PAIRS and
/// CELLALG_GB_MAX_BASIS; unset or malformed values fall back to the built-in
/// limits.
void apply_budget_from_environment();

}  // namespace cellalg::cli
