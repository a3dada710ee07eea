#include "contests/jet.hpp"

#include <algorithm>
#include <stdexcept>

namespace contests {

SeriesJet::SeriesJet(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("SeriesJet: empty coefficient list");
}

SeriesJet SeriesJet::constant(double value, int order) {
  if (order < 0) throw std::invalid_argument("SeriesJet: negative order");
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  c[0] = value;
  return SeriesJet(std::move(c));
}

SeriesJet SeriesJet::variable(double value, int order) {
  SeriesJet j = constant(value, order);
  if (order >= 1) j.c_[1] = 1.0;
  return j;
}

double SeriesJet::coeff(int k) const {
  if (k < 0) throw std::out_of_range("SeriesJet: negative coefficient index");
  return k <= order() ? c_[static_cast<std::size_t>(k)] : 0.0;
}

double SeriesJet::eval(double dx) const {
  double r = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * dx + *it;
  return r;
}

SeriesJet SeriesJet::truncated(int order) const {
  if (order < 0) throw std::invalid_argument("SeriesJet: negative order");
  std::vector<double> c(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), order + 1));
  c.resize(static_cast<std::size_t>(order) + 1, 0.0);
  return SeriesJet(std::move(c));
}

SeriesJet SeriesJet::derivative() const {
  if (order() == 0) throw std::domain_error("SeriesJet: derivative of order-0 jet");
  std::vector<double> c(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = static_cast<double>(k) * c_[k];
  return SeriesJet(std::move(c));
}

SeriesJet SeriesJet::operator-() const {
  SeriesJet r = *this;
  for (double& x : r.c_) x = -x;
  return r;
}

SeriesJet& SeriesJet::operator+=(const SeriesJet& rhs) {
  *this = *this + rhs;
  return *this;
}

SeriesJet& SeriesJet::operator-=(const SeriesJet& rhs) {
  *this = *this - rhs;
  return *this;
}

SeriesJet operator+(const SeriesJet& a, const SeriesJet& b) {
  const int ord = std::min(a.order(), b.order());
  std::vector<double> c(static_cast<std::size_t>(ord) + 1);
  for (int k = 0; k <= ord; ++k) c[k] = a.c_[k] + b.c_[k];
  return SeriesJet(std::move(c));
}

SeriesJet operator-(const SeriesJet& a, const SeriesJet& b) {
  const int ord = std::min(a.order(), b.order());
  std::vector<double> c(static_cast<std::size_t>(ord) + 1);
  for (int k = 0; k <= ord; ++k) c[k] = a.c_[k] - b.c_[k];
  return SeriesJet(std::move(c));
}

SeriesJet operator*(const SeriesJet& a, const SeriesJet& b) {
  const int ord = std::min(a.order(), b.order());
  std::vector<double> c(static_cast<std::size_t>(ord) + 1, 0.0);
  for (int i = 0; i <= ord; ++i)
    for (int j = 0; i + j <= ord && j <= b.order(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return SeriesJet(std::move(c));
}

SeriesJet operator/(const SeriesJet& a, const SeriesJet& b) {
  if (b.value() == 0.0)
    throw std::domain_error("SeriesJet: division by series with zero constant term");
  const int ord = std::min(a.order(), b.order());
  std::vector<double> c(static_cast<std::size_t>(ord) + 1, 0.0);
  for (int k = 0; k <= ord; ++k) {
    double acc = a.c_[k];
    for (int j = 0; j < k; ++j) acc -= c[j] * b.c_[k - j];
    c[k] = acc / b.c_[0];
  }
  return SeriesJet(std::move(c));
}

SeriesJet operator*(double s, const SeriesJet& a) {
  SeriesJet r = a;
  for (double& x : r.c_) x *= s;
  return r;
}

SeriesJet operator+(const SeriesJet& a, double s) {
  SeriesJet r = a;
  r.c_[0] += s;
  return r;
}

SeriesJet SeriesJet::compose(const SeriesJet& inner) const {
  if (inner.value() != 0.0)
    throw std::domain_error("SeriesJet: composition requires zero inner constant term");
  const int ord = std::min(order(), inner.order());
  SeriesJet in = inner.truncated(ord);
  SeriesJet r = SeriesJet::constant(0.0, ord);
  for (int k = order(); k >= 0; --k) r = r * in + c_[static_cast<std::size_t>(k)];
  return r;
}

}  // namespace contests
