#pragma once

#include <string>
#include <vector>

#include "kzero/class_poly.hpp"

namespace kzero {

/// Power series in one counting variable, truncated after x^order, with
/// ClassPoly coefficients. Arithmetic between series of different orders
/// truncates to the smaller order.
class ClassSeries {
 public:
  /// Zero series of the given order.
  explicit ClassSeries(unsigned order = 0) : coeffs_(order + 1) {}
  /// Order is coeffs.size() - 1; coeffs must not be empty.
  explicit ClassSeries(std::vector<ClassPoly> coeffs);

  static ClassSeries one(unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<ClassPoly>& coefficients() const { return coeffs_; }
  /// Coefficient of x^k; k must not exceed order().
  const ClassPoly& operator[](unsigned k) const { return coeffs_.at(k); }

  ClassSeries truncated(unsigned order) const;

  ClassSeries& operator+=(const ClassSeries& rhs);
  ClassSeries& operator-=(const ClassSeries& rhs);
  ClassSeries operator-() const;

  friend bool operator==(const ClassSeries& lhs, const ClassSeries& rhs) = default;

 private:
  std::vector<ClassPoly> coeffs_;
};

inline ClassSeries operator+(ClassSeries lhs, const ClassSeries& rhs) { return lhs += rhs; }
inline ClassSeries operator-(ClassSeries lhs, const ClassSeries& rhs) { return lhs -= rhs; }

/// Cauchy product truncated to min(s.order, t.order).
ClassSeries series_mul(const ClassSeries& s, const ClassSeries& t);
inline ClassSeries operator*(const ClassSeries& s, const ClassSeries& t) { return series_mul(s, t); }

/// Multiplicative inverse; throws Errc::non_unit_constant_term unless s[0] == 1.
ClassSeries series_inverse(const ClassSeries& s);

/// (1 - sign x^a)^p = sum_k C(p, k) (-sign)^k x^{a k}, with sign = +1 or -1.
ClassSeries binomial_series(const ClassPoly& p, unsigned a, int sign, unsigned order);

/// MacDonald's series sum_d [SP^d] x^d = (1 - x)^{-p}.
ClassSeries macdonald_series(const ClassPoly& p, unsigned order);

/// s^e by repeated multiplication.
ClassSeries series_pow(const ClassSeries& s, unsigned e);

/// `c0 + c1*x + ... + O(x^{order+1})`; multi-term coefficients are parenthesized.
std::string to_string(const ClassSeries& s, const std::string& var = "x");
std::string to_latex(const ClassSeries& s, const std::string& var = "x");

}  // namespace kzero
