#include <numeric>

#include "kzero/errors.hpp"
#include "kzero/kernels.hpp"
#include "kzero/permgrp.hpp"

namespace kzero {

namespace {

Integer to_integer(std::uint64_t v) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

// sum_c weights[c] * p^c
ClassPoly weighted_powers(const std::vector<Integer>& weights, const ClassPoly& p) {
  ClassPoly total;
  ClassPoly power = ClassPoly::one();
  for (std::size_t c = 0; c < weights.size(); ++c) {
    if (weights[c] != 0) total += power * Rational(weights[c]);
    if (c + 1 < weights.size()) power *= p;
  }
  return total;
}

unsigned euler_phi(unsigned n) {
  unsigned count = 0;
  for (unsigned k = 1; k <= n; ++k) count += std::gcd(k, n) == 1 ? 1 : 0;
  return count;
}

}  // namespace

ClassPoly symmetric_product_class(const ClassPoly& p, unsigned d) {
  return symbolic_binomial(p + ClassPoly::constant(static_cast<long>(d) - 1), d);
}

ClassPoly burnside_quotient_class(const PermGroup& g, const ClassPoly& p) {
  // Fix(sigma) in X^n is a copy of X^{#cycles(sigma)}.
  auto hist = kernels::parallel::cycle_count_histogram(g);
  std::vector<Integer> weights;
  weights.reserve(hist.size());
  for (auto h : hist) weights.push_back(to_integer(h));
  return weighted_powers(weights, p) / Integer(static_cast<unsigned long>(g.order()));
}

ClassPoly permutation_product_class(const PermGroup& g, const ClassPoly& p, unsigned cap) {
  const unsigned n = g.degree();
  if (n > cap) {
    throw Error(Errc::degree_too_large,
                "coset enumeration needs degree <= " + std::to_string(cap) + ", got " + std::to_string(n));
  }
  if (n == 0) return ClassPoly::one();

  auto partitions = partitions_with_counts(n, std::max(cap, n));
  std::vector<Permutation> representatives;
  representatives.reserve(partitions.size());
  for (const auto& pc : partitions) representatives.push_back(permutation_of_type(pc.partition));
  auto chi = kernels::parallel::fixed_coset_counts(g, representatives);

  std::vector<Integer> weights(n + 1, 0);
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    weights[partitions[i].partition.length()] += partitions[i].count * to_integer(chi[i]);
  }
  Integer n_factorial;
  mpz_fac_ui(n_factorial.get_mpz_t(), n);
  return weighted_powers(weights, p) / n_factorial;
}

ClassPoly cyclic_product_class(unsigned n, const ClassPoly& p) {
  if (n < 1) throw Error(Errc::invalid_argument, "cyclic product needs n >= 1");
  std::vector<Integer> weights(n + 1, 0);
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d == 0) weights[n / d] += euler_phi(d);
  }
  return weighted_powers(weights, p) / Integer(n);
}

}  // namespace kzero
