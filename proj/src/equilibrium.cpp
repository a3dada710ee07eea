#include "contests/equilibrium.hpp"

#include <algorithm>
#include <cmath>

namespace contests {

namespace {

constexpr double kAssumption2Tol = 1e-9;   // g_k(X*) >= -tol counts as passing
constexpr double kNegativeEffortTol = 1e-9;
constexpr double kClauseTol = 1e-10;       // grid checks of f_t signs
constexpr int kClauseGridPoints = 512;

double eval_f_from_tower(double X, const InfoMeasures& s, const std::vector<double>& g) {
  double f = X;
  for (std::size_t k = 0; k < s.size(); ++k) f -= static_cast<double>(s[k]) * g[k];
  return f;
}

struct RootScan {
  bool found = false;
  bool boundary = false;  // root sits at the lower end of the interval
  double x = 0.0;
  double lo = 0.0, hi = 0.0;
  double residual = 0.0;
};

/// Highest root of f on (lo, hi]: scan downward from hi for the first sign
/// change, then bisect. Falls back to a boundary root when f has no sign
/// change but vanishes at the lower end.
template <typename F>
RootScan scan_highest_root(F&& f, double lo, double hi, int points, double tol,
                           double probe_offset) {
  RootScan rs;
  const double span = hi - lo;
  double upper = hi;
  double f_upper = f(hi);
  if (f_upper <= 0.0) {
    // no room above: treat hi itself as the root
    rs.found = true;
    rs.x = hi;
    rs.lo = rs.hi = hi;
    rs.residual = f_upper;
    return rs;
  }
  for (int j = points - 1; j >= 1; --j) {
    const double x = lo + span * j / points;
    const double fx = f(x);
    if (fx <= 0.0) {
      double a = x, b = upper;
      while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        if (f(mid) <= 0.0)
          a = mid;
        else
          b = mid;
      }
      rs.found = true;
      rs.x = 0.5 * (a + b);
      rs.lo = a;
      rs.hi = b;
      rs.residual = f(rs.x);
      return rs;
    }
    upper = x;
    f_upper = fx;
  }
  const double probe = lo + probe_offset;
  if (std::abs(f(probe)) <= 1e-6 * (hi > 0 ? hi : 1.0)) {
    rs.found = true;
    rs.boundary = true;
    rs.x = lo;
    rs.lo = rs.hi = lo;
    rs.residual = 0.0;
    return rs;
  }
  return rs;
}

InfoMeasures suffix_measures(const Contest& c, int t) { return subcontest_measures(c, t); }

}  // namespace

double eval_f(const MarginalBenefit& m, const Contest& c, int t, double X) {
  const int T = c.num_periods();
  if (t < 0 || t > T) throw std::out_of_range("eval_f: t out of range");
  if (t == T) return X;
  const InfoMeasures s = suffix_measures(c, t);
  const auto g = g_tower(m, X, static_cast<int>(s.size()));
  return eval_f_from_tower(X, s, g);
}

double eval_f_prime(const MarginalBenefit& m, const Contest& c, int t, double X) {
  const int T = c.num_periods();
  if (t < 0 || t > T) throw std::out_of_range("eval_f_prime: t out of range");
  if (t == T) return 1.0;
  const InfoMeasures s = suffix_measures(c, t);
  const auto jets = g_tower_jets(m, X, static_cast<int>(s.size()), 1);
  double fp = 1.0;
  for (std::size_t k = 0; k < s.size(); ++k)
    fp -= static_cast<double>(s[k]) * jets[k].coeff(1);
  return fp;
}

namespace {

RootScan scan_f0(const MarginalBenefit& m, const Contest& c, const SolveOptions& opts) {
  const InfoMeasures s = info_measures(c);
  const int K = static_cast<int>(s.size());
  const double xbar = m.xbar();
  auto f0 = [&](double X) { return eval_f_from_tower(X, s, g_tower(m, X, K)); };
  return scan_highest_root(f0, 0.0, xbar, opts.scan_points, opts.root_tol, xbar * 1e-9);
}

struct SolvedRoot {
  double x = 0.0;
  double f_prime = 0.0;
  double residual = 0.0;
  std::vector<SeriesJet> jets;  // g tower at x, one spare derivative order
};

/// Bisection landing plus two Newton polish steps (clamped to the bracket);
/// leaves rational roots like 3/4 exact to machine precision.
SolvedRoot polish_root(const MarginalBenefit& m, const Contest& c, const InfoMeasures& s,
                       const RootScan& rs) {
  const int T = static_cast<int>(s.size());
  SolvedRoot sol;
  sol.x = rs.x;
  for (int pass = 0; pass < 3; ++pass) {
    sol.jets = g_tower_jets(m, sol.x, T, 1);
    double f = sol.x, fp = 1.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      f -= static_cast<double>(s[k]) * sol.jets[k].value();
      fp -= static_cast<double>(s[k]) * sol.jets[k].coeff(1);
    }
    sol.residual = f;
    sol.f_prime = fp;
    if (pass == 2 || fp <= 0.0 || f == 0.0) break;
    const double next = std::clamp(sol.x - f / fp, rs.lo, rs.hi);
    if (next == sol.x) break;
    sol.x = next;
  }
  return sol;
}

}  // namespace

double solve_total_effort(const MarginalBenefit& m, const Contest& c,
                          const SolveOptions& opts) {
  const RootScan rs = scan_f0(m, c, opts);
  if (!rs.found)
    throw NoRootFound("solve_total_effort: f0 has no root on (0, xbar] for contest " +
                      c.str());
  if (rs.boundary) return 0.0;
  const SolvedRoot sol = polish_root(m, c, info_measures(c), rs);
  if (!(sol.f_prime > 0.0))
    throw NonMonotoneAtRoot("solve_total_effort: f0'(X*) = " + std::to_string(sol.f_prime) +
                            " <= 0 at X* = " + std::to_string(sol.x));
  return sol.x;
}

EquilibriumOutcome solve_equilibrium(const MarginalBenefit& m, const Contest& c,
                                     const SolveOptions& opts) {
  const int T = c.num_periods();
  EquilibriumOutcome out{c};
  const RootScan rs = scan_f0(m, c, opts);
  if (!rs.found)
    throw NoRootFound("solve_equilibrium: f0 has no root on (0, xbar] for contest " +
                      c.str());
  if (rs.boundary) {
    out.X_star = 0.0;
    out.period_efforts.assign(T, 0.0);
    out.period_payoffs.assign(T, 0.0);
    out.welfare = 0.0;
    out.flags.degenerate_boundary = true;
    out.flags.root_bracket = {0.0, 0.0};
    return out;
  }
  const InfoMeasures s = info_measures(c);
  const SolvedRoot sol = polish_root(m, c, s, rs);
  if (!(sol.f_prime > 0.0))
    throw NonMonotoneAtRoot("solve_equilibrium: f0'(X*) <= 0 at X* = " +
                            std::to_string(sol.x));
  const double X = sol.x;
  std::vector<double> g(sol.jets.size());
  for (std::size_t i = 0; i < sol.jets.size(); ++i) g[i] = sol.jets[i].value();

  const double hX = m.h(X);
  out.X_star = X;
  out.period_efforts.resize(T);
  out.period_payoffs.resize(T);
  for (int t = 0; t < T; ++t) {
    const InfoMeasures sub = suffix_measures(c, t + 1);
    double x = g[0];
    for (std::size_t k = 0; k < sub.size(); ++k)
      x += static_cast<double>(sub[k]) * g[k + 1];
    if (x < -kNegativeEffortTol)
      throw NegativeEffort("solve_equilibrium: negative effort " + std::to_string(x) +
                               " in period " + std::to_string(t + 1) + " of contest " +
                               c.str(),
                           t);
    out.period_efforts[t] = x;
    out.period_payoffs[t] = x * hX;
  }
  out.welfare = X * hX;

  out.flags.assumption1_ok = true;  // root located, interior, f0 increasing there
  out.flags.root_bracket = {rs.lo, rs.hi};
  out.flags.residual = sol.residual;
  for (int k = 2; k <= T; ++k)
    out.flags.min_gk = std::min(out.flags.min_gk, g[static_cast<std::size_t>(k - 1)]);
  out.flags.assumption2_ok = out.flags.min_gk >= -kAssumption2Tol;
  return out;
}

AssumptionReport check_assumptions(const MarginalBenefit& m, const Contest& c,
                                   const SolveOptions& opts) {
  const int T = c.num_periods();
  const double xbar = m.xbar();
  const double floor_x = xbar * 1e-9;  // keep evaluations off the h singularity
  AssumptionReport rep;
  rep.period_checks.resize(T);

  std::vector<double> roots(static_cast<std::size_t>(T) + 1, 0.0);  // roots[t] = X_t
  bool all_ok = true;
  for (int t = T - 1; t >= 0; --t) {
    auto& pc = rep.period_checks[t];
    pc.t = t;
    const InfoMeasures s = suffix_measures(c, t);
    const int K = static_cast<int>(s.size());
    auto ft = [&](double X) {
      return eval_f_from_tower(std::max(X, floor_x), s, g_tower(m, std::max(X, floor_x), K));
    };
    const double lo = roots[t + 1];
    const RootScan rs =
        scan_highest_root(ft, lo, xbar, opts.scan_points, opts.root_tol, floor_x);
    pc.root_found = rs.found;
    if (!rs.found) {
      all_ok = false;
      roots[t] = lo;
      continue;
    }
    pc.root = rs.x;
    roots[t] = rs.x;
    // clause 2: f_t < 0 strictly between the subgame root and this root
    for (int i = 1; i <= kClauseGridPoints; ++i) {
      const double X = lo + (rs.x - lo) * i / (kClauseGridPoints + 1);
      if (X <= floor_x) continue;
      if (ft(X) > kClauseTol) {
        pc.negative_below_root = false;
        pc.violating_X = X;
        all_ok = false;
        break;
      }
    }
    // clause 3: f_t' > 0 from the root up to the saturation point
    for (int i = 0; i <= kClauseGridPoints; ++i) {
      const double X = std::max(rs.x + (xbar - rs.x) * i / kClauseGridPoints, floor_x);
      const auto jets = g_tower_jets(m, X, K, 1);
      double fp = 1.0;
      for (std::size_t k = 0; k < s.size(); ++k)
        fp -= static_cast<double>(s[k]) * jets[k].coeff(1);
      if (!(fp > -kClauseTol)) {
        pc.increasing_above_root = false;
        pc.violating_X = X;
        all_ok = false;
        break;
      }
    }
  }

  rep.X_star = roots[0];
  rep.degenerate_boundary = roots[0] <= xbar * 1e-8;
  rep.assumption1_ok = all_ok && !rep.degenerate_boundary && roots[0] < xbar;

  if (!rep.degenerate_boundary && rep.period_checks[0].root_found && T >= 2) {
    const auto g = g_tower(m, roots[0], T);
    for (int k = 2; k <= T; ++k) {
      const double gk = g[static_cast<std::size_t>(k - 1)];
      if (gk < rep.min_gk) {
        rep.min_gk = gk;
        rep.min_gk_index = k;
      }
    }
    rep.assumption2_ok = rep.min_gk >= -kAssumption2Tol;
  } else {
    rep.assumption2_ok = !rep.degenerate_boundary;
  }
  return rep;
}

}  // namespace contests
