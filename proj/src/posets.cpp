#include "kzero/posets.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "kzero/errors.hpp"

namespace kzero {

IntersectionPoset build_intersection_poset(const SimplicialComplex& k) {
  if (k.is_empty()) throw Error(Errc::empty_complex, "intersection poset of a complex without facets");

  // Close the facet set under pairwise intersection.
  std::set<Simplex> closed(k.facets().begin(), k.facets().end());
  std::vector<Simplex> frontier(k.facets());
  while (!frontier.empty()) {
    std::vector<Simplex> fresh;
    std::vector<Simplex> current(closed.begin(), closed.end());
    for (const auto& a : frontier) {
      for (const auto& b : current) {
        Simplex c = a.intersect(b);
        if (closed.insert(c).second) fresh.push_back(std::move(c));
      }
    }
    frontier = std::move(fresh);
  }

  IntersectionPoset poset;
  poset.nodes_.push_back({std::nullopt, Integer(1)});
  // Decreasing size puts every node after all nodes below it.
  for (auto it = closed.rbegin(); it != closed.rend(); ++it) poset.nodes_.push_back({*it, Integer(0)});

  const std::size_t n = poset.nodes_.size();
  poset.below_.assign(n * n, false);
  for (std::size_t j = 1; j < n; ++j) {
    poset.below_[j] = true;  // bottom < everything
    for (std::size_t i = 1; i < n; ++i) {
      const auto& lower = *poset.nodes_[i].vertex_set;
      const auto& upper = *poset.nodes_[j].vertex_set;
      if (i != j && upper.is_subset_of(lower)) poset.below_[i * n + j] = true;
    }
  }

  for (std::size_t x = 1; x < n; ++x) {
    Integer sum = 0;
    for (std::size_t y = 0; y < x; ++y) {
      if (poset.below(y, x)) sum += poset.nodes_[y].mobius;
    }
    poset.nodes_[x].mobius = -sum;
  }
  return poset;
}

std::vector<std::size_t> IntersectionPoset::atoms() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j < nodes_.size(); ++j) {
    bool covers_bottom = true;
    for (std::size_t i = 1; i < nodes_.size() && covers_bottom; ++i) covers_bottom = !below(i, j);
    if (covers_bottom) out.push_back(j);
  }
  return out;
}

std::optional<std::size_t> IntersectionPoset::find(const Simplex& s) const {
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (*nodes_[i].vertex_set == s) return i;
  }
  return std::nullopt;
}

ClassPoly inclusion_exclusion(const IntersectionPoset& poset,
                              const std::function<ClassPoly(const Simplex&)>& class_of,
                              const ClassPoly& ambient) {
  ClassPoly total = ambient * Rational(poset.nodes()[IntersectionPoset::bottom()].mobius);
  for (std::size_t i = 1; i < poset.size(); ++i) {
    const auto& node = poset.nodes()[i];
    if (node.mobius == 0) continue;
    total += class_of(*node.vertex_set) * Rational(node.mobius);
  }
  return total;
}

std::string format_poset(const IntersectionPoset& poset) {
  const std::size_t n = poset.size();
  // rank = length of the longest chain from the bottom
  std::vector<std::size_t> rank(n, 0);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (poset.below(i, j)) rank[j] = std::max(rank[j], rank[i] + 1);
    }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });

  auto label = [&](std::size_t i) {
    return i == IntersectionPoset::bottom() ? std::string("0^") : to_string(*poset.nodes()[i].vertex_set);
  };
  std::ostringstream os;
  for (std::size_t i : order) {
    os << std::string(2 * rank[i], ' ') << label(i) << "  mu=" << poset.nodes()[i].mobius.get_str();
    if (rank[i] > 1) {
      os << "  covers";
      for (std::size_t lo = 1; lo < n; ++lo) {
        if (!poset.below(lo, i)) continue;
        bool cover = true;
        for (std::size_t mid = 1; mid < n && cover; ++mid) cover = !(poset.below(lo, mid) && poset.below(mid, i));
        if (cover) os << " " << label(lo);
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace kzero
