#pragma once

#include "contests/equilibrium.hpp"

namespace contests {

/// Brute-force subgame-perfect equilibrium on a discretized effort grid,
/// independent of the characterization formulas. Validation contract:
/// agreement with solve_equilibrium within two grid steps.
struct OracleConfig {
  int grid_points = 2001;
  double effort_max = 0.0;    // 0 -> xbar
  int br_iterations = 500;
  double br_tolerance = 0.0;  // 0 -> 1e-3 of a grid step
};

/// Backward induction: for each period, tabulates the symmetric within-period
/// equilibrium (damped iterated best response) and the final total effort as
/// functions of the prior cumulative effort, with linear interpolation
/// between nodes. Cost is linear in the number of periods and quadratic in
/// grid_points; the player count is capped at 4.
EquilibriumOutcome oracle_solve(const MarginalBenefit& m, const Contest& c,
                                const OracleConfig& cfg = {});

}  // namespace contests
