#include "kzero/class_series.hpp"

#include <algorithm>
#include <sstream>

#include "kzero/errors.hpp"

namespace kzero {

ClassSeries::ClassSeries(std::vector<ClassPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(Errc::invalid_argument, "a series needs at least the constant coefficient");
}

ClassSeries ClassSeries::one(unsigned order) {
  ClassSeries s(order);
  s.coeffs_[0] = ClassPoly::one();
  return s;
}

ClassSeries ClassSeries::truncated(unsigned order) const {
  if (order >= this->order()) return *this;
  return ClassSeries(std::vector<ClassPoly>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

ClassSeries& ClassSeries::operator+=(const ClassSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

ClassSeries& ClassSeries::operator-=(const ClassSeries& rhs) { return *this += -rhs; }

ClassSeries ClassSeries::operator-() const {
  ClassSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

ClassSeries series_mul(const ClassSeries& s, const ClassSeries& t) {
  unsigned order = std::min(s.order(), t.order());
  std::vector<ClassPoly> out(order + 1);
  for (unsigned i = 0; i <= order; ++i) {
    if (s[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= order; ++j) {
      if (t[j].is_zero()) continue;
      out[i + j] += s[i] * t[j];
    }
  }
  return ClassSeries(std::move(out));
}

ClassSeries series_inverse(const ClassSeries& s) {
  if (s[0] != ClassPoly::one()) {
    throw Error(Errc::non_unit_constant_term,
                "series inverse requires constant term 1, got " + to_string(s[0]));
  }
  // inv_k = -sum_{i=1..k} s_i inv_{k-i}
  std::vector<ClassPoly> inv(s.order() + 1);
  inv[0] = ClassPoly::one();
  for (unsigned k = 1; k <= s.order(); ++k) {
    ClassPoly acc;
    for (unsigned i = 1; i <= k; ++i) {
      if (!s[i].is_zero() && !inv[k - i].is_zero()) acc += s[i] * inv[k - i];
    }
    inv[k] = -acc;
  }
  return ClassSeries(std::move(inv));
}

ClassSeries binomial_series(const ClassPoly& p, unsigned a, int sign, unsigned order) {
  if (a == 0) throw Error(Errc::invalid_argument, "binomial series step must be at least 1");
  if (sign != 1 && sign != -1) throw Error(Errc::invalid_argument, "binomial series sign must be +1 or -1");
  std::vector<ClassPoly> coeffs(order + 1);
  for (unsigned k = 0; a * k <= order; ++k) {
    ClassPoly c = symbolic_binomial(p, k);
    // (-sign)^k
    if (sign == 1 && k % 2 == 1) c = -c;
    coeffs[a * k] = std::move(c);
  }
  return ClassSeries(std::move(coeffs));
}

ClassSeries macdonald_series(const ClassPoly& p, unsigned order) { return binomial_series(-p, 1, 1, order); }

ClassSeries series_pow(const ClassSeries& s, unsigned e) {
  ClassSeries result = ClassSeries::one(s.order());
  for (unsigned i = 0; i < e; ++i) result = series_mul(result, s);
  return result;
}

namespace {

template <typename PolyFn, typename PowerFn>
std::string render_series(const ClassSeries& s, PolyFn poly, PowerFn power, const char* times) {
  std::ostringstream os;
  bool first = true;
  for (unsigned k = 0; k <= s.order(); ++k) {
    const ClassPoly& c = s[k];
    if (c.is_zero()) continue;
    std::string x_part = k == 0 ? "" : power(k);
    bool single = c.terms().size() == 1;
    std::string body;
    bool negative = false;
    if (single) {
      negative = c.terms().begin()->second < 0;
      ClassPoly mag = negative ? -c : c;
      body = poly(mag);
      if (!x_part.empty()) {
        body = body == "1" ? x_part : body + times + x_part;
      }
    } else {
      body = "(" + poly(c) + ")";
      if (!x_part.empty()) body += times + x_part;
    }
    if (first) {
      os << (negative ? "-" : "") << body;
    } else {
      os << (negative ? " - " : " + ") << body;
    }
    first = false;
  }
  std::string tail = "O(" + power(s.order() + 1) + ")";
  if (first) return tail;
  os << " + " << tail;
  return os.str();
}

}  // namespace

std::string to_string(const ClassSeries& s, const std::string& var) {
  auto power = [&](unsigned k) { return k == 1 ? var : var + "^" + std::to_string(k); };
  return render_series(s, [](const ClassPoly& p) { return to_string(p); }, power, "*");
}

std::string to_latex(const ClassSeries& s, const std::string& var) {
  auto power = [&](unsigned k) { return k == 1 ? var : var + "^{" + std::to_string(k) + "}"; };
  return render_series(s, [](const ClassPoly& p) { return to_latex(p); }, power, " \\cdot ");
}

}  // namespace kzero
