#include "kzero/polyhedral.hpp"

#include "kzero/errors.hpp"
#include "kzero/kernels.hpp"
#include "kzero/posets.hpp"

namespace kzero {

namespace {

Rational to_rational(std::uint64_t v) { return Rational(Integer(static_cast<unsigned long>(v))); }

void require_not_single_simplex(const SimplicialComplex& k) {
  if (k.facets().size() < 2) {
    throw Error(Errc::single_simplex, "complex is a single simplex; need at least two facets");
  }
}

}  // namespace

ClassPoly polyhedral_product_class(const SimplicialComplex& k, const PolyPair& pair) {
  const unsigned n = k.n();
  if (k.is_empty()) return pair.a_class.pow(n);
  auto f = kernels::parallel::face_size_histogram(k);
  ClassPoly diff = pair.x_class - pair.a_class;
  ClassPoly total;
  for (unsigned size = 0; size <= n; ++size) {
    if (f[size] == 0) continue;
    total += diff.pow(size) * pair.a_class.pow(n - size) * to_rational(f[size]);
  }
  return total;
}

ClassPoly fat_wedge_class(unsigned n, int d, const ClassPoly& x_class) {
  if (d < 0 || d > static_cast<int>(n)) {
    throw Error(Errc::d_out_of_range, "fat wedge needs 0 <= d <= n, got d=" + std::to_string(d) +
                                          ", n=" + std::to_string(n));
  }
  ClassPoly reduced = x_class - ClassPoly::one();
  ClassPoly total;
  Integer binom;
  for (unsigned i = static_cast<unsigned>(d); i <= n; ++i) {
    mpz_bin_uiui(binom.get_mpz_t(), n, i);
    total += reduced.pow(n - i) * Rational(binom);
  }
  return total;
}

ClassPoly polyhedral_product_complement_class(const SimplicialComplex& k, const PolyPair& pair) {
  const unsigned n = k.n();
  auto poset = build_intersection_poset(k);
  auto class_of = [&](const Simplex& s) {
    auto size = static_cast<unsigned>(s.size());
    return pair.x_class.pow(size) * pair.a_class.pow(n - size);
  };
  return inclusion_exclusion(poset, class_of, pair.x_class.pow(n));
}

ClassPoly w_class(unsigned n, const ClassPoly& x_class) {
  if (n < 1) throw Error(Errc::invalid_argument, "W_n needs n >= 1");
  return x_class * (x_class - ClassPoly::one()).pow(n - 1);
}

void require_dimension_condition(const SimplicialComplex& k) {
  int dim = k.dim();
  if (2 * (dim + 1) >= static_cast<int>(k.n())) {
    throw Error(Errc::dimension_condition_violated,
                "requires 2(dim K + 1) < n, got dim K = " + std::to_string(dim) + ", n = " + std::to_string(k.n()));
  }
}

ClassPoly delta_config_class(const SimplicialComplex& k, const ClassPoly& x_class) {
  require_dimension_condition(k);
  auto f = kernels::parallel::face_size_histogram(k);
  ClassPoly reduced = x_class - ClassPoly::one();
  ClassPoly inner = ClassPoly::one();
  for (unsigned size = 1; size < f.size(); ++size) {
    if (f[size] != 0) inner += reduced.pow(size) * to_rational(f[size]);
  }
  return x_class * inner;
}

ClassPoly delta_config_class_disjoint(const std::vector<ArrangementComponent>& parts, const ClassPoly& x_class) {
  if (parts.size() < 3) {
    throw Error(Errc::too_few_components,
                "disjoint union formula needs at least 3 components, got " + std::to_string(parts.size()));
  }
  ClassPoly total;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& k = parts[i].complex;
    bool proper = k.facets().size() >= 2;
    for (const auto& facet : k.facets()) proper = proper && facet.size() < k.n();
    if (!proper) {
      throw Error(Errc::component_is_single_simplex,
                  "component " + std::to_string(i + 1) + " is a single simplex; need at least two facets");
    }
    total += parts[i].delta_class ? *parts[i].delta_class : delta_config_class(k, x_class);
  }
  return total - x_class * Rational(static_cast<long>(parts.size()) - 1);
}

ClassPoly m_complement_class(const SimplicialComplex& k, const ClassPoly& x_class) {
  require_dimension_condition(k);
  require_not_single_simplex(k);
  auto poset = build_intersection_poset(k);
  // Delta_sigma is X^{|sigma|} times the diagonal copy of X.
  auto class_of = [&](const Simplex& s) { return x_class.pow(static_cast<unsigned>(s.size()) + 1); };
  return inclusion_exclusion(poset, class_of, x_class.pow(k.n()));
}

Rational chi_complement_manifold(const SimplicialComplex& k, const Integer& chi, unsigned m_dim) {
  require_dimension_condition(k);
  const unsigned n = k.n();
  auto f = kernels::parallel::face_size_histogram(k);
  Integer signed_chi = m_dim % 2 == 0 ? chi : Integer(-chi);
  Integer base = signed_chi - 1;
  Integer inner = 1;
  for (unsigned size = 1; size < f.size(); ++size) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), size);
    inner += power * Integer(static_cast<unsigned long>(f[size]));
  }
  Integer chi_n;
  mpz_pow_ui(chi_n.get_mpz_t(), chi.get_mpz_t(), n);
  bool odd_sign = (static_cast<unsigned long long>(m_dim) * (n + 1)) % 2 == 1;
  Integer correction = chi * inner;
  return Rational(odd_sign ? Integer(chi_n + correction) : Integer(chi_n - correction));
}

}  // namespace kzero
