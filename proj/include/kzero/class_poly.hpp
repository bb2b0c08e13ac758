#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace kzero {

using Integer = mpz_class;
using Rational = mpq_class;

/// One non-negative exponent per variable of the owning polynomial.
using Exponents = std::vector<unsigned>;

/// Graded lexicographic order, largest monomial first.
struct GradedLexGreater {
  bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

/// Element of K0 written as a polynomial with rational coefficients in named
/// class variables.
///
/// Canonical form: variables are kept sorted by name in descending order and
/// only variables that occur in some term are kept; terms are iterated in
/// graded lexicographic order; zero coefficients are never stored. Two values
/// are therefore equal exactly when they denote the same polynomial.
class ClassPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  /// The zero polynomial, i.e. the class of the empty set.
  ClassPoly() = default;

  static ClassPoly constant(const Rational& c);
  static ClassPoly constant(long c) { return constant(Rational(c)); }
  static ClassPoly one() { return constant(1); }
  static ClassPoly variable(const std::string& name);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  /// The value when the polynomial is constant (zero included).
  std::optional<Rational> constant_value() const;
  unsigned total_degree() const;
  /// Coefficient of the monomial given as name -> exponent; absent names have exponent 0.
  Rational coefficient(const std::map<std::string, unsigned>& monomial) const;

  ClassPoly& operator+=(const ClassPoly& rhs);
  ClassPoly& operator-=(const ClassPoly& rhs);
  ClassPoly& operator*=(const ClassPoly& rhs);
  ClassPoly& operator*=(const Rational& c);
  /// Exact division by a non-zero integer scalar.
  ClassPoly& operator/=(const Integer& d);

  ClassPoly operator-() const;
  ClassPoly pow(unsigned e) const;

  friend bool operator==(const ClassPoly& lhs, const ClassPoly& rhs);

 private:
  ClassPoly(std::vector<std::string> vars, TermMap terms);

  void normalize();
  ClassPoly reindexed(const std::vector<std::string>& vars) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

inline ClassPoly operator+(ClassPoly lhs, const ClassPoly& rhs) { return lhs += rhs; }
inline ClassPoly operator-(ClassPoly lhs, const ClassPoly& rhs) { return lhs -= rhs; }
inline ClassPoly operator*(ClassPoly lhs, const ClassPoly& rhs) { return lhs *= rhs; }
inline ClassPoly operator*(const Rational& c, ClassPoly p) { return p *= c; }
inline ClassPoly operator*(ClassPoly p, const Rational& c) { return p *= c; }
inline ClassPoly operator/(ClassPoly p, const Integer& d) { return p /= d; }

/// C(p, k) = p (p-1) ... (p-k+1) / k!, with C(p, 0) = 1.
ClassPoly symbolic_binomial(const ClassPoly& p, unsigned k);

using Assignment = std::map<std::string, Integer, std::less<>>;

/// Substitutes integers for the variables: the motivic evaluation.
/// Throws Errc::missing_variable if a variable of p is unassigned.
Rational eval(const ClassPoly& p, const Assignment& assignment);

/// Replaces the variable `name` by `value` everywhere in p.
ClassPoly substitute(const ClassPoly& p, const std::string& name, const ClassPoly& value);

/// ASCII rendering, e.g. `x^3*a^2 + 2*x^2*a^3 - 2*x*a^4`.
std::string to_string(const ClassPoly& p);
std::string to_latex(const ClassPoly& p);

/// Parses the ASCII form: `+ - * ^`, `/` by a non-zero constant, integer
/// literals and parentheses. Throws Errc::parse_error.
ClassPoly parse_class_poly(std::string_view text);

std::string rational_to_string(const Rational& q);
std::string rational_to_latex(const Rational& q);

inline std::ostream& operator<<(std::ostream& os, const ClassPoly& p) { return os << to_string(p); }

}  // namespace kzero
