#include "kzero/class_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "kzero/errors.hpp"

namespace kzero {

namespace {

unsigned degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

std::vector<std::string> merged_variables(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), std::greater<>{});
  return out;
}

void accumulate_term(ClassPoly::TermMap& terms, const Exponents& e, const Rational& c) {
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  } else if (c == 0) {
    terms.erase(it);
  }
}

}  // namespace

bool GradedLexGreater::operator()(const Exponents& lhs, const Exponents& rhs) const {
  unsigned dl = degree_of(lhs);
  unsigned dr = degree_of(rhs);
  if (dl != dr) return dl > dr;
  return lhs > rhs;
}

ClassPoly::ClassPoly(std::vector<std::string> vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  normalize();
}

ClassPoly ClassPoly::constant(const Rational& c) {
  TermMap terms;
  if (c != 0) terms.emplace(Exponents{}, c);
  return ClassPoly({}, std::move(terms));
}

ClassPoly ClassPoly::variable(const std::string& name) {
  TermMap terms;
  terms.emplace(Exponents{1}, Rational(1));
  return ClassPoly({name}, std::move(terms));
}

void ClassPoly::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
  }
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;

  std::vector<std::string> vars;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) vars.push_back(vars_[i]);
  }
  TermMap terms;
  for (const auto& [e, c] : terms_) {
    Exponents reduced;
    reduced.reserve(vars.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (used[i]) reduced.push_back(e[i]);
    }
    terms.emplace(std::move(reduced), c);
  }
  vars_ = std::move(vars);
  terms_ = std::move(terms);
}

ClassPoly ClassPoly::reindexed(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> slot(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    slot[i] = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), vars_[i]) - vars.begin());
  }
  ClassPoly out;
  out.vars_ = vars;
  for (const auto& [e, c] : terms_) {
    Exponents wide(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) wide[slot[i]] = e[i];
    out.terms_.emplace(std::move(wide), c);
  }
  return out;
}

std::optional<Rational> ClassPoly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

unsigned ClassPoly::total_degree() const {
  return terms_.empty() ? 0 : degree_of(terms_.begin()->first);
}

Rational ClassPoly::coefficient(const std::map<std::string, unsigned>& monomial) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [name, power] : monomial) {
    if (power == 0) continue;
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return 0;
    e[static_cast<std::size_t>(it - vars_.begin())] = power;
  }
  auto found = terms_.find(e);
  return found == terms_.end() ? Rational(0) : found->second;
}

ClassPoly& ClassPoly::operator+=(const ClassPoly& rhs) {
  if (rhs.vars_ != vars_) {
    auto vars = merged_variables(vars_, rhs.vars_);
    *this = reindexed(vars);
    ClassPoly wide = rhs.reindexed(vars);
    for (const auto& [e, c] : wide.terms_) accumulate_term(terms_, e, c);
  } else {
    for (const auto& [e, c] : rhs.terms_) accumulate_term(terms_, e, c);
  }
  normalize();
  return *this;
}

ClassPoly& ClassPoly::operator-=(const ClassPoly& rhs) { return *this += -rhs; }

ClassPoly& ClassPoly::operator*=(const ClassPoly& rhs) {
  auto vars = merged_variables(vars_, rhs.vars_);
  ClassPoly lhs_wide = reindexed(vars);
  ClassPoly rhs_wide = rhs.reindexed(vars);
  TermMap product;
  Exponents e(vars.size());
  for (const auto& [el, cl] : lhs_wide.terms_) {
    for (const auto& [er, cr] : rhs_wide.terms_) {
      for (std::size_t i = 0; i < vars.size(); ++i) e[i] = el[i] + er[i];
      accumulate_term(product, e, cl * cr);
    }
  }
  *this = ClassPoly(std::move(vars), std::move(product));
  return *this;
}

ClassPoly& ClassPoly::operator*=(const Rational& c) {
  if (c == 0) {
    *this = ClassPoly();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

ClassPoly& ClassPoly::operator/=(const Integer& d) {
  if (d == 0) throw Error(Errc::invalid_argument, "division of a class by zero");
  Rational inv(Integer(1), d);
  inv.canonicalize();
  return *this *= inv;
}

ClassPoly ClassPoly::operator-() const {
  ClassPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

ClassPoly ClassPoly::pow(unsigned e) const {
  ClassPoly result = one();
  ClassPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const ClassPoly& lhs, const ClassPoly& rhs) {
  if (lhs.vars_ != rhs.vars_ || lhs.terms_.size() != rhs.terms_.size()) return false;
  auto it = rhs.terms_.begin();
  for (const auto& [e, c] : lhs.terms_) {
    if (e != it->first || c != it->second) return false;
    ++it;
  }
  return true;
}

ClassPoly symbolic_binomial(const ClassPoly& p, unsigned k) {
  ClassPoly result = ClassPoly::one();
  Integer factorial = 1;
  for (unsigned i = 0; i < k; ++i) {
    result *= p - ClassPoly::constant(static_cast<long>(i));
    factorial *= i + 1;
  }
  return result / factorial;
}

Rational eval(const ClassPoly& p, const Assignment& assignment) {
  std::vector<Integer> values;
  values.reserve(p.variables().size());
  for (const auto& name : p.variables()) {
    auto it = assignment.find(name);
    if (it == assignment.end()) {
      throw Error(Errc::missing_variable, "no value assigned to variable '" + name + "'");
    }
    values.push_back(it->second);
  }
  Rational sum = 0;
  for (const auto& [e, c] : p.terms()) {
    Integer monomial = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), values[i].get_mpz_t(), e[i]);
      monomial *= power;
    }
    sum += c * Rational(monomial);
  }
  return sum;
}

ClassPoly substitute(const ClassPoly& p, const std::string& name, const ClassPoly& value) {
  const auto& vars = p.variables();
  auto pos = std::find(vars.begin(), vars.end(), name);
  if (pos == vars.end()) return p;
  auto slot = static_cast<std::size_t>(pos - vars.begin());

  ClassPoly out;
  for (const auto& [e, c] : p.terms()) {
    ClassPoly term = ClassPoly::constant(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      term *= (i == slot ? value : ClassPoly::variable(vars[i])).pow(e[i]);
    }
    out += term;
  }
  return out;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string rational_to_latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string sign = q < 0 ? "-" : "";
  Integer num = abs(q.get_num());
  return sign + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

namespace {

template <typename MonomialFn, typename CoefFn>
std::string render(const ClassPoly& p, MonomialFn monomial, CoefFn coefficient, const char* times) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono = monomial(e);
    if (mono.empty()) {
      os << coefficient(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << coefficient(mag) << times << mono;
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const ClassPoly& p) {
  const auto& vars = p.variables();
  auto monomial = [&](const Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += "*";
      out += vars[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
  };
  return render(p, monomial, rational_to_string, "*");
}

std::string to_latex(const ClassPoly& p) {
  const auto& vars = p.variables();
  auto monomial = [&](const Exponents& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!out.empty()) out += " ";
      out += vars[i];
      if (e[i] > 1) out += "^{" + std::to_string(e[i]) + "}";
    }
    return out;
  };
  return render(p, monomial, rational_to_latex, " ");
}

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::parse_error: return "ParseError";
    case Errc::missing_variable: return "MissingVariable";
    case Errc::non_unit_constant_term: return "NonUnitConstantTerm";
    case Errc::vertex_out_of_range: return "VertexOutOfRange";
    case Errc::empty_complex: return "EmptyComplex";
    case Errc::d_out_of_range: return "DOutOfRange";
    case Errc::dimension_condition_violated: return "DimensionConditionViolated";
    case Errc::too_few_components: return "TooFewComponents";
    case Errc::component_is_single_simplex: return "ComponentIsSingleSimplex";
    case Errc::single_simplex: return "SingleSimplex";
    case Errc::degree_too_large: return "DegreeTooLarge";
    case Errc::order_cap_exceeded: return "OrderCapExceeded";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::order_exceeds_table: return "OrderExceedsTable";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace kzero
