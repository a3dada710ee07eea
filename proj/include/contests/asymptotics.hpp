#pragma once

#include <optional>
#include <string>

#include "contests/designer.hpp"

namespace contests {

/// Competitive-limit product formulas, usable as finite-n approximations:
/// x_s ~ xbar / prod_{k<=s}(1+n_k), X ~ xbar (1 - 1/prod(1+n_k)),
/// h(X) ~ alpha xbar / prod(1+n_k). Exact for linear h.
struct ApproxOutcome {
  std::vector<double> approx_efforts;  // per player in each period
  double approx_X = 0.0;
  double approx_h = 0.0;
};

ApproxOutcome approx_equilibrium(const MarginalBenefit& m, const Contest& c);

/// Closed-form extremal contest for the i-th highest effort or payoff.
/// `family_of_contests` marks results that stand for a whole family (any
/// contest with the same first period attains the optimum); the canonical
/// two-period representative is returned. Valid for linear h or large n.
struct ExtremalContest {
  Contest contest;
  bool family_of_contests = false;
  std::optional<Contest> tie_alternative;  // populated at an exact threshold tie
  std::string note;
};

ExtremalContest ith_effort_extremal(int n, int i, Direction dir);
ExtremalContest ith_payoff_extremal(int n, int i, Direction dir);

/// Threshold ibar = -1/2 + sqrt(5/4 + n): the payoff maximizer switches from
/// (i, n-i) to the simultaneous contest as i crosses it.
double ith_payoff_threshold(int n);

/// Approximate i-th highest effort/payoff of a contest, from the product
/// formulas (player i sits in the period containing the i-th arrival).
double approx_ith_effort(const Contest& c, int i, double xbar);
double approx_ith_payoff(const Contest& c, int i, double xbar, double alpha);

}  // namespace contests
