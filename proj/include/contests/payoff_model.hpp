#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "contests/jet.hpp"

namespace contests {

enum class BenefitFamily { tullock, linear, exponential, custom };

/// Generates the Taylor coefficients of h at a given point, to a given order.
using HJetFn = std::function<SeriesJet(double X, int order)>;

/// Marginal benefit of effort h(X). Strictly decreasing and continuously
/// differentiable up to the saturation point xbar, where h(xbar) = 0.
/// Immutable after construction; safe to share across threads.
class MarginalBenefit {
 public:
  BenefitFamily family() const { return family_; }
  const std::string& name() const { return name_; }
  const std::map<std::string, double>& params() const { return params_; }

  double xbar() const { return xbar_; }
  /// alpha = -h'(xbar) > 0; linearization slope at the saturation point.
  double alpha() const { return alpha_; }

  double h(double X) const;
  double h_prime(double X) const;

  /// Taylor expansion of h at X. For the Tullock family X must stay at or
  /// above 1e-12 (h is singular at 0).
  SeriesJet h_jet(double X, int order) const;

  friend MarginalBenefit make_custom(std::string name, double xbar, HJetFn jet,
                                     std::map<std::string, double> params);
  friend MarginalBenefit make_tullock(double v, double c);
  friend MarginalBenefit make_linear(double a, double xbar);
  friend MarginalBenefit make_exponential(double a, double b, double c);

 private:
  MarginalBenefit() = default;

  BenefitFamily family_ = BenefitFamily::custom;
  std::string name_;
  std::map<std::string, double> params_;
  double xbar_ = 0.0;
  double alpha_ = 0.0;
  bool singular_at_zero_ = false;
  HJetFn jet_;
};

/// h(X) = v/X - c, saturation at v/c. The normalized case v = c = 1 is the
/// standard rent-seeking contest with unit prize.
MarginalBenefit make_tullock(double v, double c);

/// h(X) = a (xbar - X).
MarginalBenefit make_linear(double a, double xbar);

/// h(X) = (a - c) - b^X with a > 1, b > 1, c >= 0 and a - c > 1, so the
/// saturation point log_b(a - c) is positive.
MarginalBenefit make_exponential(double a, double b, double c);

/// h(X) = a b^{-X} - c with a > c > 0, b > 1; saturation at log_b(a/c).
/// Provided as a custom-family instance (decaying-exponential benefit).
MarginalBenefit make_exp_decay(double a, double b, double c);

/// User-supplied h via its jet generator. Sign conditions (h decreasing,
/// h(xbar) = 0, alpha > 0) are validated numerically on a 1000-point grid.
MarginalBenefit make_custom(std::string name, double xbar, HJetFn jet,
                            std::map<std::string, double> params = {});

/// Values g_1(X), ..., g_K(X) of the recursion g_1 = -h/h',
/// g_{k+1} = -g_k' g_1, computed with jet arithmetic. X in (0, xbar].
std::vector<double> g_tower(const MarginalBenefit& m, double X, int K);

/// Same tower but as jets, each retaining at least `keep_order` derivative
/// coefficients (used where f_t' is needed alongside f_t).
std::vector<SeriesJet> g_tower_jets(const MarginalBenefit& m, double X, int K,
                                    int keep_order);

}  // namespace contests
