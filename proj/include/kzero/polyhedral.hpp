#pragma once

#include <optional>
#include <vector>

#include "kzero/class_poly.hpp"
#include "kzero/simplicial.hpp"

namespace kzero {

/// Classes [X] and [A] of a pair (X, A).
struct PolyPair {
  ClassPoly x_class;
  ClassPoly a_class;
};

/// [(X,A)^K] = sum over faces sigma of K (empty face included) of
/// ([X]-[A])^{|sigma|} [A]^{n-|sigma|}. The complex without faces gives [A]^n.
ClassPoly polyhedral_product_class(const SimplicialComplex& k, const PolyPair& pair);

/// Fat wedge W_d(X, n): tuples with at least d coordinates at the basepoint,
/// sum_{i=d}^{n} C(n,i) ([X]-1)^{n-i}. Throws Errc::d_out_of_range unless 0 <= d <= n.
ClassPoly fat_wedge_class(unsigned n, int d, const ClassPoly& x_class);

/// [X^n - (X,A)^K] by inclusion-exclusion over the facet intersection poset.
/// Throws Errc::empty_complex.
ClassPoly polyhedral_product_complement_class(const SimplicialComplex& k, const PolyPair& pair);

/// [W_n] = [X]([X]-1)^{n-1}: tuples whose last coordinate differs from all others.
ClassPoly w_class(unsigned n, const ClassPoly& x_class);

/// Throws Errc::dimension_condition_violated unless 2(dim K + 1) < n.
void require_dimension_condition(const SimplicialComplex& k);

/// [Delta_K(X)] = [X](1 + sum over non-empty faces of ([X]-1)^{|sigma|}),
/// valid when 2(dim K + 1) < n.
ClassPoly delta_config_class(const SimplicialComplex& k, const ClassPoly& x_class);

struct ArrangementComponent {
  SimplicialComplex complex;
  /// Precomputed [Delta_{K_i}(X)]; computed by delta_config_class when absent.
  std::optional<ClassPoly> delta_class;
};

/// [Delta_K(X)] for K = K_1 + ... + K_N (N >= 3, no K_i a single simplex):
/// sum_i [Delta_{K_i}(X)] - (N-1)[X].
ClassPoly delta_config_class_disjoint(const std::vector<ArrangementComponent>& parts, const ClassPoly& x_class);

/// [M(K,X)] = [X^n - Delta_K(X)] = sum over the intersection poset of mu(sigma) [X]^{|sigma|+1},
/// the bottom contributing [X]^n.
ClassPoly m_complement_class(const SimplicialComplex& k, const ClassPoly& x_class);

/// chi(M(K,X)) for X a boundaryless m-manifold with Euler characteristic chi:
/// chi^n - (-1)^{m(n+1)} chi (1 + sum_{sigma != empty} ((-1)^m chi - 1)^{|sigma|}).
Rational chi_complement_manifold(const SimplicialComplex& k, const Integer& chi, unsigned m_dim);

}  // namespace kzero
