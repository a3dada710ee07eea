#pragma once

#include <stdexcept>
#include <string>

namespace contests {

struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// f_0 has no sign change on the scan grid: the well-behavedness assumption
/// on the inverted best responses fails for this model/contest pair.
struct NoRootFound : SolverError {
  using SolverError::SolverError;
};

/// f_0 is not strictly increasing at the located root.
struct NonMonotoneAtRoot : SolverError {
  using SolverError::SolverError;
};

/// The characterization produced a negative period effort: the model is
/// outside the interior-equilibrium domain of the theory.
struct NegativeEffort : SolverError {
  NegativeEffort(const std::string& what, int period_index)
      : SolverError(what), period(period_index) {}
  int period;
};

/// Best-response iteration failed to settle on the oracle grid.
struct NoConvergence : SolverError {
  NoConvergence(const std::string& what, int cycle)
      : SolverError(what), cycle_length(cycle) {}
  int cycle_length;
};

}  // namespace contests
