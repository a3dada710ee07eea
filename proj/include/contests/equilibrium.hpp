#pragma once

#include <array>
#include <limits>
#include <vector>

#include "contests/contest.hpp"
#include "contests/errors.hpp"
#include "contests/payoff_model.hpp"

namespace contests {

struct SolveOptions {
  /// Scan grid density for locating the highest root of f_0 on (0, xbar].
  int scan_points = 4096;
  /// Bisection stops when the bracket is narrower than this.
  double root_tol = 1e-12;
};

struct AssumptionFlags {
  bool assumption1_ok = false;
  bool assumption2_ok = false;
  std::array<double, 2> root_bracket{0.0, 0.0};
  double residual = 0.0;
  /// True for the boundary case X* = 0 (e.g. a one-player Tullock contest),
  /// which the theory's interior-root requirement excludes.
  bool degenerate_boundary = false;
  /// min over k = 2..T of g_k(X*); +inf for single-period contests.
  double min_gk = std::numeric_limits<double>::infinity();
};

struct EquilibriumOutcome {
  Contest contest;
  double X_star = 0.0;
  std::vector<double> period_efforts;  // per player in each period
  std::vector<double> period_payoffs;
  double welfare = 0.0;  // X* h(X*)
  AssumptionFlags flags;
};

/// Inverted best response f_t(X) = X - sum_{k=1}^{T-t} S_k(n^t) g_k(X);
/// f_T(X) = X. Its value at the realized total effort equals the cumulative
/// effort after period t.
double eval_f(const MarginalBenefit& m, const Contest& c, int t, double X);
double eval_f_prime(const MarginalBenefit& m, const Contest& c, int t, double X);

/// Highest root of f_0 on (0, xbar]: downward grid scan for the first sign
/// change, then bisection. Returns 0 for the flagged degenerate boundary
/// case. Throws NoRootFound / NonMonotoneAtRoot.
double solve_total_effort(const MarginalBenefit& m, const Contest& c,
                          const SolveOptions& opts = {});

/// Full equilibrium: total effort, per-period efforts
/// x_t = g_1(X*) + sum_k S_k(n^t) g_{k+1}(X*), payoffs x_t h(X*), welfare.
EquilibriumOutcome solve_equilibrium(const MarginalBenefit& m, const Contest& c,
                                     const SolveOptions& opts = {});

/// Grid verification of the two maintained assumptions. Never throws on a
/// violation; everything is reported.
struct PeriodAssumptionCheck {
  int t = 0;
  bool root_found = false;
  double root = 0.0;
  bool negative_below_root = true;   // f_t < 0 on the open interval below the root
  bool increasing_above_root = true; // f_t' > 0 from the root up to xbar
  double violating_X = std::numeric_limits<double>::quiet_NaN();
};

struct AssumptionReport {
  bool assumption1_ok = false;
  bool assumption2_ok = false;
  bool degenerate_boundary = false;
  double X_star = 0.0;
  double min_gk = std::numeric_limits<double>::infinity();
  int min_gk_index = 0;
  std::vector<PeriodAssumptionCheck> period_checks;
};

AssumptionReport check_assumptions(const MarginalBenefit& m, const Contest& c,
                                   const SolveOptions& opts = {});

}  // namespace contests
