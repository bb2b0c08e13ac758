#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kzero/class_poly.hpp"
#include "kzero/permgrp.hpp"

namespace kzero {

struct Stratum {
  std::string label;
  ClassPoly cls;
};

/// A generator of the acting group together with the permutation it induces
/// on the strata (on stratum indices 1..#strata).
struct GeneratorAction {
  Permutation element;
  Permutation on_strata;
};

/// Finite group acting on a finite set of strata.
///
/// Stratified-action semantics are assumed of the input: an element that maps
/// a stratum to itself fixes it pointwise. Strata in one orbit must carry the
/// same class.
class StratifiedGSpace {
 public:
  /// Closes the group generated by the generator elements (degree `degree`) and
  /// extends the generator actions to every element. Throws
  /// Errc::invalid_argument if the actions do not define a homomorphism or if
  /// strata in one orbit have different classes.
  static StratifiedGSpace create(std::vector<Stratum> strata, unsigned degree,
                                 const std::vector<GeneratorAction>& generators,
                                 std::size_t cap = default_group_cap);

  const std::vector<Stratum>& strata() const { return strata_; }
  const PermGroup& group() const { return group_; }
  /// Permutation of stratum indices induced by group().elements()[element_index].
  const Permutation& action(std::size_t element_index) const { return actions_[element_index]; }
  const Permutation& action_of(const Permutation& element) const;

 private:
  std::vector<Stratum> strata_;
  PermGroup group_;
  std::vector<Permutation> actions_;
};

/// Sum of stratum classes over one representative per G-orbit.
ClassPoly orbit_sum_class(const StratifiedGSpace& sp);
/// (1/|G|) sum_g [X^g], where X^g is the union of strata mapped to themselves by g.
ClassPoly burnside_check_class(const StratifiedGSpace& sp);
/// sum over conjugacy class representatives g, over C(g)-orbit representatives S
/// of strata fixed by g, of [S] / |C(g) cap Stab(S)|.
ClassPoly mainaction_class_finite(const StratifiedGSpace& sp);

struct DescriptorStratum {
  std::string label;
  ClassPoly cls;
  Integer c_order;  // |C_{Gamma_S}(g)|
};

/// The summation data of the quotient formula for one finite-order element g:
/// representatives of C(g)-orbits of strata fixed by g.
struct DescriptorEntry {
  std::string element;
  std::vector<DescriptorStratum> strata;
};

struct ActionDescriptor {
  std::vector<DescriptorEntry> entries;
};

/// sum over entries and strata of class / c_order. Throws Errc::invalid_argument on c_order < 1.
ClassPoly mainaction_class_descriptor(const ActionDescriptor& d);

struct OrbifoldCell {
  int dim;
  Integer stabilizer_order;
};

/// e(Gamma, X) = sum over orbit representatives of cells of (-1)^dim / |stabilizer|.
Rational orbifold_euler(std::span<const OrbifoldCell> cells);
/// chi(X / Gamma) = sum over finite-order class representatives gamma of e(C(gamma), X^gamma).
Rational akita_chi(std::span<const std::vector<OrbifoldCell>> per_element);

struct CentralIsometryClass {
  std::string label;
  Integer centralizer_order;
};

struct CrystalChi {
  Rational chi;
  /// chi * [pt]
  ClassPoly cls;
  /// Set when chi is not an integer, which genuine crystallographic data cannot produce.
  std::optional<std::string> warning;
};

/// chi(R^n / Gamma) = sum over conjugacy classes of central isometries of 1/|C(gamma)|; 0 when there are none.
CrystalChi crystal_chi(std::span<const CentralIsometryClass> classes);

/// x -> linear * x + translation on Q^dim; linear is row-major dim x dim.
struct AffineMap {
  std::size_t dim = 0;
  std::vector<Rational> linear;
  std::vector<Rational> translation;
};

/// Exact determinant of a row-major square matrix, by Gaussian elimination over Q.
Rational determinant(std::vector<Rational> matrix, std::size_t dim);

/// True iff linear - Id is invertible. Throws Errc::dimension_mismatch on inconsistent sizes.
bool has_unique_fixed_point(const AffineMap& f);

}  // namespace kzero
