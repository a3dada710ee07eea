#pragma once

#include <span>
#include <vector>

namespace contests {

/// Truncated Taylor series (a "jet") of a scalar function at some expansion
/// point. Coefficient k multiplies eps^k, where eps is the offset from the
/// expansion point. Order = highest retained power. Arithmetic truncates the
/// result to the lowest operand order, which is the highest order whose
/// coefficients are still trustworthy.
class SeriesJet {
 public:
  SeriesJet() : c_{0.0} {}
  explicit SeriesJet(std::vector<double> coeffs);

  static SeriesJet constant(double value, int order);
  /// value + eps, i.e. the identity function expanded at `value`.
  static SeriesJet variable(double value, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double value() const { return c_[0]; }
  double coeff(int k) const;
  std::span<const double> coeffs() const { return c_; }

  /// Evaluate the truncated polynomial at offset dx (Horner).
  double eval(double dx) const;

  SeriesJet truncated(int order) const;
  /// Formal derivative; the order drops by one.
  SeriesJet derivative() const;

  SeriesJet operator-() const;
  SeriesJet& operator+=(const SeriesJet& rhs);
  SeriesJet& operator-=(const SeriesJet& rhs);

  friend SeriesJet operator+(const SeriesJet& a, const SeriesJet& b);
  friend SeriesJet operator-(const SeriesJet& a, const SeriesJet& b);
  friend SeriesJet operator*(const SeriesJet& a, const SeriesJet& b);
  /// Throws std::domain_error when b has a zero constant term.
  friend SeriesJet operator/(const SeriesJet& a, const SeriesJet& b);

  friend SeriesJet operator*(double s, const SeriesJet& a);
  friend SeriesJet operator*(const SeriesJet& a, double s) { return s * a; }
  friend SeriesJet operator+(const SeriesJet& a, double s);
  friend SeriesJet operator+(double s, const SeriesJet& a) { return a + s; }
  friend SeriesJet operator-(const SeriesJet& a, double s) { return a + (-s); }
  friend SeriesJet operator-(double s, const SeriesJet& a) { return -a + s; }

  /// Series composition this(inner(eps)); inner must have zero constant term.
  SeriesJet compose(const SeriesJet& inner) const;

 private:
  std::vector<double> c_;
};

}  // namespace contests
