#pragma once

#include <string>
#include <utility>

#include "contests/payoff_model.hpp"

namespace contests {

// exit codes shared by every subcommand
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitSolver = 3;
constexpr int kExitVerification = 4;

/// Model from a shell literal "family:p1,p2[,p3]" (tullock:v,c; linear:a,xbar;
/// exponential:a,b,c; expdecay:a,b,c), an inline JSON object such as
/// {"family":"tullock","v":1,"c":1}, or a path to a .json file with the same
/// schema.
MarginalBenefit parse_model(const std::string& spec);

/// "7" or "2..12".
std::pair<int, int> parse_n_range(const std::string& text);

/// 12-significant-digit float formatting used by every CSV writer.
std::string fmt_g12(double v);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace contests
