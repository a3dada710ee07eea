#include "contests/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace contests {

ApproxOutcome approx_equilibrium(const MarginalBenefit& m, const Contest& c) {
  ApproxOutcome out;
  const double xbar = m.xbar();
  double prod = 1.0;
  out.approx_efforts.reserve(c.periods().size());
  for (int nt : c.periods()) {
    prod *= 1.0 + nt;
    out.approx_efforts.push_back(xbar / prod);
  }
  out.approx_X = xbar * (1.0 - 1.0 / prod);
  out.approx_h = m.alpha() * xbar / prod;
  return out;
}

namespace {

void check_ni(int n, int i) {
  if (n < 1 || n > kMaxTotalPlayers) throw std::invalid_argument("extremal: bad n");
  if (i < 1 || i > n) throw std::invalid_argument("extremal: i must be in [1, n]");
}

Contest singletons_then_block(int singles, int block) {
  std::vector<int> parts(singles, 1);
  if (block > 0) parts.push_back(block);
  return Contest(std::move(parts));
}

}  // namespace

double ith_payoff_threshold(int n) { return -0.5 + std::sqrt(1.25 + n); }

ExtremalContest ith_effort_extremal(int n, int i, Direction dir) {
  check_ni(n, i);
  if (dir == Direction::minimize) {
    // i-1 sequential leaders, everyone else pooled
    return ExtremalContest{singletons_then_block(i - 1, n + 1 - i), false, std::nullopt,
                           "unique up to the approximation"};
  }
  // any contest whose first period has i players
  Contest canonical = i == n ? Contest::simultaneous(n) : Contest({i, n - i});
  return ExtremalContest{std::move(canonical), true, std::nullopt,
                         "any contest with first period of size " + std::to_string(i)};
}

ExtremalContest ith_payoff_extremal(int n, int i, Direction dir) {
  check_ni(n, i);
  if (dir == Direction::minimize) {
    if (i == n)
      return ExtremalContest{Contest::sequential(n), false, std::nullopt,
                             "lowest payoff: sequential"};
    // i-1 sequential, a pair, then the rest sequential
    std::vector<int> parts(i - 1, 1);
    parts.push_back(2);
    parts.insert(parts.end(), n - i - 1, 1);
    return ExtremalContest{Contest(std::move(parts)), false, std::nullopt, ""};
  }
  const double ibar = ith_payoff_threshold(n);
  Contest split = i == n ? Contest::simultaneous(n) : Contest({i, n - i});
  Contest sim = Contest::simultaneous(n);
  if (std::abs(i - ibar) < 1e-12)
    return ExtremalContest{std::move(split), false, sim, "exact threshold tie"};
  if (i <= ibar) return ExtremalContest{std::move(split), false, std::nullopt, ""};
  return ExtremalContest{std::move(sim), false, std::nullopt, ""};
}

double approx_ith_effort(const Contest& c, int i, double xbar) {
  if (i < 1 || i > c.n()) throw std::invalid_argument("approx_ith_effort: bad i");
  double prod = 1.0;
  int seen = 0;
  for (int nt : c.periods()) {
    prod *= 1.0 + nt;
    seen += nt;
    if (seen >= i) return xbar / prod;
  }
  return xbar / prod;
}

double approx_ith_payoff(const Contest& c, int i, double xbar, double alpha) {
  double prod = 1.0;
  for (int nt : c.periods()) prod *= 1.0 + nt;
  return approx_ith_effort(c, i, xbar) * alpha * xbar / prod;
}

}  // namespace contests
