#pragma once

#include "signed_inertia/polynomial.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace signed_inertia {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kParseError = 2, kPrecondition = 3, kBudget = 4 };

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "lc t^v (t - r)^k ... (rest)^k", splitting off positive rational roots.
std::string factored_string(const RationalPolynomial& p, const std::string& variable = "t");

}  // namespace signed_inertia
