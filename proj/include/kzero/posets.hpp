#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kzero/class_poly.hpp"
#include "kzero/simplicial.hpp"

namespace kzero {

struct PosetNode {
  /// The intersection of facets this node stands for; empty for the artificial bottom.
  std::optional<Simplex> vertex_set;
  Integer mobius;
};

/// Intersections of the facets of a complex, ordered by reverse inclusion,
/// below an artificial bottom element standing for the ambient space.
///
/// Node 0 is the bottom. The remaining nodes are sorted by decreasing vertex
/// count, which is a linear extension of the order.
class IntersectionPoset {
 public:
  const std::vector<PosetNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  static constexpr std::size_t bottom() { return 0; }
  /// Strict order: below(i, j) means i < j.
  bool below(std::size_t i, std::size_t j) const { return below_[i * nodes_.size() + j]; }
  /// The atoms are exactly the facets.
  std::vector<std::size_t> atoms() const;
  /// Index of the node with this vertex set, if present.
  std::optional<std::size_t> find(const Simplex& s) const;

  friend IntersectionPoset build_intersection_poset(const SimplicialComplex& k);

 private:
  std::vector<PosetNode> nodes_;
  std::vector<bool> below_;
};

/// Throws Errc::empty_complex when k has no facet.
IntersectionPoset build_intersection_poset(const SimplicialComplex& k);

/// sum over all nodes of mu(node) * class, where the bottom contributes `ambient`
/// and every other node contributes class_of(its vertex set). This is the class
/// of the complement of the union of the atoms.
ClassPoly inclusion_exclusion(const IntersectionPoset& poset,
                              const std::function<ClassPoly(const Simplex&)>& class_of,
                              const ClassPoly& ambient);

/// Indented Hasse listing with Mobius values, one node per line.
std::string format_poset(const IntersectionPoset& poset);

}  // namespace kzero
