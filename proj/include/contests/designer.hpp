#pragma once

#include <optional>
#include <string>
#include <vector>

#include "contests/equilibrium.hpp"

namespace contests {

enum class Objective {
  total_effort,
  total_welfare,
  lowest_effort,
  lowest_payoff,
  highest_effort,
  highest_payoff,
  effort_inequality,
  payoff_inequality,
};

enum class Direction { minimize, maximize };

constexpr int kNumObjectives = 8;
const char* objective_name(Objective o);
std::optional<Objective> objective_from_name(const std::string& name);

/// All eight designer objectives of one contest. Extremes come from periods
/// 1 and T (earlier movers exert and earn weakly more).
struct ObjectiveReport {
  double total_effort = 0.0;
  double total_welfare = 0.0;
  double lowest_effort = 0.0;
  double lowest_payoff = 0.0;
  double highest_effort = 0.0;
  double highest_payoff = 0.0;
  double effort_inequality = 0.0;
  double payoff_inequality = 0.0;

  double get(Objective o) const;
};

ObjectiveReport objectives_from(const EquilibriumOutcome& out);
ObjectiveReport evaluate_objectives(const MarginalBenefit& m, const Contest& c,
                                    const SolveOptions& opts = {});

struct SearchOptions {
  double tie_tol = 1e-9;  // argopt keeps every contest this close to the optimum
  int jobs = 1;
  int max_n = 16;  // exhaustive cap; CONTEST_MAX_N overrides it in the CLI
  SolveOptions solve;
};

struct ContestEval {
  Contest contest;
  ObjectiveReport report;
};

/// Every composition of n evaluated once, in enumeration (lexicographic)
/// order. Solver failures are skipped and reported in `failures`.
std::vector<ContestEval> evaluate_all(const MarginalBenefit& m, int n,
                                      const SearchOptions& opts = {},
                                      std::vector<std::string>* failures = nullptr);

struct SearchResult {
  Objective objective{};
  Direction direction{};
  double optimal_value = 0.0;
  std::vector<Contest> argopt;  // all contests within tie_tol of the optimum
  int failures = 0;
};

SearchResult search(const MarginalBenefit& m, int n, Objective objective,
                    Direction direction, const SearchOptions& opts = {});

/// Machine-checkable forms of the paper's five propositions, verified
/// against exhaustive search for each n in [n_lo, n_hi].
struct PropositionCheck {
  std::string proposition;  // "P1".."P5"
  int n = 0;
  bool pass = true;
  std::vector<std::string> notes;      // failed subchecks and skips
  std::vector<std::string> witnesses;  // argopt sets backing the verdict
};

struct VerificationReport {
  std::vector<PropositionCheck> checks;
  bool all_pass = true;
};

VerificationReport verify_propositions(const MarginalBenefit& m, int n_lo, int n_hi,
                                       const SearchOptions& opts = {});

}  // namespace contests
