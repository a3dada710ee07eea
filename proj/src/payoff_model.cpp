#include "contests/payoff_model.hpp"

#include <cmath>
#include <stdexcept>

namespace contests {

namespace {

constexpr double kTullockMinX = 1e-12;
constexpr double kSaturationTol = 1e-10;
constexpr int kValidationGridPoints = 1000;

void validate_shape(const MarginalBenefit& m) {
  const double xbar = m.xbar();
  const double h_at_xbar = m.h(xbar);
  if (std::abs(h_at_xbar) > kSaturationTol)
    throw std::invalid_argument("MarginalBenefit: h(xbar) != 0, got " +
                                std::to_string(h_at_xbar));
  for (int i = 1; i <= kValidationGridPoints; ++i) {
    const double X = xbar * i / kValidationGridPoints;
    if (!(m.h_prime(X) < 0.0))
      throw std::invalid_argument("MarginalBenefit: h not strictly decreasing at X = " +
                                  std::to_string(X));
  }
  if (!(m.alpha() > 0.0))
    throw std::invalid_argument("MarginalBenefit: alpha = -h'(xbar) must be positive");
}

}  // namespace

double MarginalBenefit::h(double X) const { return h_jet(X, 0).value(); }

double MarginalBenefit::h_prime(double X) const { return h_jet(X, 1).coeff(1); }

SeriesJet MarginalBenefit::h_jet(double X, int order) const {
  if (singular_at_zero_ && X < kTullockMinX)
    throw std::domain_error(name_ + ": h evaluated at X = " + std::to_string(X) +
                            " below the 1e-12 singularity guard");
  return jet_(X, order);
}

MarginalBenefit make_tullock(double v, double c) {
  if (!(v > 0.0) || !(c > 0.0))
    throw std::invalid_argument("make_tullock: v and c must be positive");
  MarginalBenefit m;
  m.family_ = BenefitFamily::tullock;
  m.name_ = "tullock";
  m.params_ = {{"v", v}, {"c", c}};
  m.xbar_ = v / c;
  m.singular_at_zero_ = true;
  m.jet_ = [v, c](double X, int order) {
    // v/(X+eps) - c = v/X sum_j (-eps/X)^j - c
    std::vector<double> cs(static_cast<std::size_t>(order) + 1);
    double term = v / X;
    cs[0] = term - c;
    for (int j = 1; j <= order; ++j) {
      term = -term / X;
      cs[j] = term;
    }
    return SeriesJet(std::move(cs));
  };
  m.alpha_ = -m.h_prime(m.xbar_);  // = c^2/v
  validate_shape(m);
  return m;
}

MarginalBenefit make_linear(double a, double xbar) {
  if (!(a > 0.0) || !(xbar > 0.0))
    throw std::invalid_argument("make_linear: a and xbar must be positive");
  MarginalBenefit m;
  m.family_ = BenefitFamily::linear;
  m.name_ = "linear";
  m.params_ = {{"a", a}, {"xbar", xbar}};
  m.xbar_ = xbar;
  m.jet_ = [a, xbar](double X, int order) {
    std::vector<double> cs(static_cast<std::size_t>(order) + 1, 0.0);
    cs[0] = a * (xbar - X);
    if (order >= 1) cs[1] = -a;
    return SeriesJet(std::move(cs));
  };
  m.alpha_ = a;
  validate_shape(m);
  return m;
}

MarginalBenefit make_exponential(double a, double b, double c) {
  if (!(a > 1.0) || !(b > 1.0) || !(c >= 0.0))
    throw std::invalid_argument("make_exponential: need a > 1, b > 1, c >= 0");
  if (!(a - c > 1.0))
    throw std::invalid_argument(
        "make_exponential: a - c must exceed 1 for a positive saturation point");
  MarginalBenefit m;
  m.family_ = BenefitFamily::exponential;
  m.name_ = "exponential";
  m.params_ = {{"a", a}, {"b", b}, {"c", c}};
  m.xbar_ = std::log(a - c) / std::log(b);
  const double logb = std::log(b);
  m.jet_ = [a, b, c, logb](double X, int order) {
    // (a - c) - b^X exp(eps log b)
    std::vector<double> cs(static_cast<std::size_t>(order) + 1);
    const double bx = std::pow(b, X);
    cs[0] = (a - c) - bx;
    double term = bx;
    for (int j = 1; j <= order; ++j) {
      term *= logb / j;
      cs[j] = -term;
    }
    return SeriesJet(std::move(cs));
  };
  m.alpha_ = -m.h_prime(m.xbar_);
  validate_shape(m);
  return m;
}

MarginalBenefit make_exp_decay(double a, double b, double c) {
  if (!(a > 0.0) || !(b > 1.0) || !(c > 0.0) || !(a > c))
    throw std::invalid_argument("make_exp_decay: need a > c > 0 and b > 1");
  const double xbar = std::log(a / c) / std::log(b);
  const double logb = std::log(b);
  HJetFn jet = [a, b, c, logb](double X, int order) {
    std::vector<double> cs(static_cast<std::size_t>(order) + 1);
    const double abx = a * std::pow(b, -X);
    cs[0] = abx - c;
    double term = abx;
    for (int j = 1; j <= order; ++j) {
      term *= -logb / j;
      cs[j] = term;
    }
    return SeriesJet(std::move(cs));
  };
  return make_custom("expdecay", xbar, std::move(jet), {{"a", a}, {"b", b}, {"c", c}});
}

MarginalBenefit make_custom(std::string name, double xbar, HJetFn jet,
                            std::map<std::string, double> params) {
  if (!(xbar > 0.0)) throw std::invalid_argument("make_custom: xbar must be positive");
  if (!jet) throw std::invalid_argument("make_custom: missing jet generator");
  MarginalBenefit m;
  m.family_ = BenefitFamily::custom;
  m.name_ = std::move(name);
  m.params_ = std::move(params);
  m.xbar_ = xbar;
  m.jet_ = std::move(jet);
  m.alpha_ = -m.h_prime(xbar);
  validate_shape(m);
  return m;
}

std::vector<SeriesJet> g_tower_jets(const MarginalBenefit& m, double X, int K,
                                    int keep_order) {
  if (K < 1) throw std::invalid_argument("g_tower: K must be positive");
  if (!(X > 0.0) || X > m.xbar() * (1.0 + 1e-12))
    throw std::domain_error("g_tower: X outside (0, xbar]");
  const int ord = K + keep_order;
  const SeriesJet hj = m.h_jet(X, ord + 1);
  const SeriesJet hp = hj.derivative();  // order = ord
  if (hp.value() == 0.0)
    throw std::domain_error("g_tower: h'(X) = 0, violates strict monotonicity");
  const SeriesJet g = -(hj.truncated(ord) / hp);
  std::vector<SeriesJet> tower;
  tower.reserve(static_cast<std::size_t>(K));
  tower.push_back(g);
  for (int k = 2; k <= K; ++k) tower.push_back(-(tower.back().derivative() * g));
  return tower;
}

std::vector<double> g_tower(const MarginalBenefit& m, double X, int K) {
  const auto jets = g_tower_jets(m, X, K, 0);
  std::vector<double> vals(jets.size());
  for (std::size_t i = 0; i < jets.size(); ++i) vals[i] = jets[i].value();
  return vals;
}

}  // namespace contests
