#include "contests/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace contests {

namespace {

struct Grid {
  std::vector<double> x;
  double step = 0.0;
  double top = 0.0;

  // final-total tables: past saturation everyone later exerts zero
  double interp(const std::vector<double>& tbl, double z) const {
    if (z <= 0.0) return tbl.front();
    if (z >= top) return z;
    const std::size_t j =
        std::min(static_cast<std::size_t>(z / step), tbl.size() - 2);
    const double w = (z - x[j]) / step;
    return tbl[j] * (1.0 - w) + tbl[j + 1] * w;
  }

  // effort tables: past saturation the optimal effort is zero
  double interp_effort(const std::vector<double>& tbl, double z) const {
    if (z >= top) return 0.0;
    return interp(tbl, z);
  }
};

// payoff of one player exerting `effort` when the final total is `total`;
// zero effort pays zero regardless of h (relevant for h singular at 0)
double payoff(const MarginalBenefit& m, double effort, double total) {
  if (effort <= 0.0) return 0.0;
  return effort * m.h(total);
}

/// Best response on the grid against `others` (cumulative effort of everyone
/// else, with followers folded in through the continuation table): full scan,
/// then a least-squares parabola over a ~sqrt(P) window around the best node.
/// The wide window keeps the vertex stable against interpolation noise in the
/// continuation table while shrinking with the grid step.
class BestResponse {
 public:
  BestResponse(const MarginalBenefit& m, const Grid& g, const std::vector<double>* cont)
      : m_(m), g_(g), cont_(cont) {
    window_ = std::max<std::size_t>(3, static_cast<std::size_t>(
                                           std::ceil(std::sqrt(double(g.x.size())) / 2.0)));
    pay_.resize(g.x.size());
  }

  double operator()(double others) {
    const std::size_t P = g_.x.size();
    std::size_t best = 0;
    for (std::size_t i = 0; i < P; ++i) {
      const double after = others + g_.x[i];
      const double total = cont_ ? g_.interp(*cont_, after) : after;
      pay_[i] = payoff(m_, g_.x[i], total);
      if (pay_[i] > pay_[best]) best = i;
    }
    const std::size_t lo = best > window_ ? best - window_ : 0;
    const std::size_t hi = std::min(best + window_, P - 1);
    if (hi - lo < 4) return g_.x[best];
    // least-squares fit of a + b u + c u^2 over u = (x - x_best)/step
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, t0 = 0, t1 = 0, t2 = 0;
    for (std::size_t i = lo; i <= hi; ++i) {
      const double u = (double(i) - double(best));
      const double y = pay_[i];
      const double u2 = u * u;
      s0 += 1; s1 += u; s2 += u2; s3 += u2 * u; s4 += u2 * u2;
      t0 += y; t1 += u * y; t2 += u2 * y;
    }
    // solve the 3x3 normal equations by Cramer's rule
    const double D = s0 * (s2 * s4 - s3 * s3) - s1 * (s1 * s4 - s2 * s3) +
                     s2 * (s1 * s3 - s2 * s2);
    if (D == 0.0) return g_.x[best];
    const double b = (t0 * (s3 * s2 - s1 * s4) + t1 * (s0 * s4 - s2 * s2) +
                      t2 * (s1 * s2 - s0 * s3)) / D;
    const double cq = (t0 * (s1 * s3 - s2 * s2) + t1 * (s2 * s1 - s0 * s3) +
                       t2 * (s0 * s2 - s1 * s1)) / D;
    if (!(cq < 0.0)) return g_.x[best];
    const double vertex = -b / (2.0 * cq);
    if (std::abs(vertex) > double(window_)) return g_.x[best];
    return std::clamp(g_.x[best] + vertex * g_.step, 0.0, g_.top);
  }

 private:
  const MarginalBenefit& m_;
  const Grid& g_;
  const std::vector<double>* cont_;
  std::size_t window_;
  std::vector<double> pay_;
};

/// Symmetric within-period equilibrium given prior cumulative effort:
/// damped fixed point of the best response, warm-started from `y0`.
double within_period_equilibrium(BestResponse& br, double prior, int n_t, double y0,
                                 const Grid& g, int max_iters, double tol) {
  double y = y0;
  double lambda = 1.0;
  double prev_d = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    const double b = br(prior + (n_t - 1) * y);
    const double d = b - y;
    if (std::abs(d) <= tol) return b;
    if (it > 60 && std::abs(d) <= 0.5 * g.step) return b;  // settled within half a cell
    if (prev_d * d < 0.0) lambda = std::max(lambda * 0.5, 1.0 / 16.0);
    y += lambda * d;
    prev_d = d;
  }
  throw NoConvergence("oracle: best-response iteration did not settle (prior = " +
                          std::to_string(prior) + ")",
                      2);
}

}  // namespace

EquilibriumOutcome oracle_solve(const MarginalBenefit& m, const Contest& c,
                                const OracleConfig& cfg) {
  if (c.n() > 4)
    throw std::invalid_argument("oracle_solve: capped at 4 players (grid cost)");
  if (cfg.grid_points < 3) throw std::invalid_argument("oracle_solve: grid_points < 3");
  const double top = cfg.effort_max > 0.0 ? cfg.effort_max : m.xbar();
  if (top > m.xbar() * (1.0 + 1e-12))
    throw std::invalid_argument("oracle_solve: effort_max beyond the saturation point");

  Grid g;
  const std::size_t P = static_cast<std::size_t>(cfg.grid_points);
  g.x.resize(P);
  g.top = top;
  g.step = top / double(P - 1);
  for (std::size_t i = 0; i < P; ++i) g.x[i] = top * double(i) / double(P - 1);
  const double tol = cfg.br_tolerance > 0.0 ? cfg.br_tolerance : 1e-3 * g.step;

  const int T = c.num_periods();
  std::vector<std::vector<double>> effort_tab(T);
  std::vector<double> cont;  // final total as a function of cumulative effort
  bool have_cont = false;

  for (int t = T - 1; t >= 0; --t) {
    const int nt = c.periods()[t];
    BestResponse br(m, g, have_cont ? &cont : nullptr);
    // the first period is only ever entered with zero prior effort
    const std::size_t nodes = t == 0 ? 1 : P;
    std::vector<double> e(nodes), F(nodes);
    double warm = -1.0;
    for (std::size_t j = 0; j < nodes; ++j) {
      const double z = g.x[j];
      const double start = warm >= 0.0 ? warm : std::max(0.0, top - z) / (nt + 1);
      const double y =
          within_period_equilibrium(br, z, nt, start, g, cfg.br_iterations, tol);
      warm = y;
      e[j] = y;
      const double after = z + nt * y;
      F[j] = have_cont ? g.interp(cont, after) : after;
    }
    effort_tab[t] = std::move(e);
    cont = std::move(F);
    have_cont = true;
  }

  EquilibriumOutcome out{c};
  double X = 0.0;
  out.period_efforts.resize(T);
  for (int t = 0; t < T; ++t) {
    const double x = t == 0 ? effort_tab[0][0] : g.interp_effort(effort_tab[t], X);
    out.period_efforts[t] = x;
    X += c.periods()[t] * x;
  }
  out.X_star = X;
  const double hX = m.h(std::max(X, m.xbar() * 1e-9));
  out.period_payoffs.resize(T);
  for (int t = 0; t < T; ++t) out.period_payoffs[t] = out.period_efforts[t] * hX;
  out.welfare = X * hX;
  out.flags.assumption1_ok = true;
  out.flags.assumption2_ok = true;
  out.flags.root_bracket = {X - g.step, X + g.step};
  out.flags.residual = 0.0;
  return out;
}

}  // namespace contests
