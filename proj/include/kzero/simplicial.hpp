#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace kzero {

using Vertex = unsigned;

/// Strictly increasing set of 1-based vertex labels. The empty simplex is a
/// legitimate value.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts and deduplicates.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  const std::vector<Vertex>& vertices() const { return vertices_; }
  /// Number of vertices, written |sigma| in the class formulas.
  std::size_t size() const { return vertices_.size(); }
  /// size() - 1; the empty simplex has dimension -1.
  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  bool empty() const { return vertices_.empty(); }
  bool contains(Vertex v) const;
  bool is_subset_of(const Simplex& other) const;
  Simplex intersect(const Simplex& other) const;

  /// Orders by cardinality, then lexicographically.
  friend std::strong_ordering operator<=>(const Simplex& lhs, const Simplex& rhs);
  friend bool operator==(const Simplex& lhs, const Simplex& rhs) = default;

 private:
  std::vector<Vertex> vertices_;
};

std::string to_string(const Simplex& s);

/// Finite abstract simplicial complex on {1..n}, stored by its facets.
///
/// The complex with no faces at all (no facets) is distinct from the complex
/// whose only face is the empty simplex (a single empty facet).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Keeps only the maximal members of `faces`. Throws Errc::vertex_out_of_range.
  static SimplicialComplex from_facets(unsigned n, const std::vector<Simplex>& faces);
  /// All subsets of {1..n}.
  static SimplicialComplex full_simplex(unsigned n);
  /// n isolated vertices.
  static SimplicialComplex discrete(unsigned n);

  unsigned n() const { return n_; }
  /// Facets in (cardinality, lexicographic) order.
  const std::vector<Simplex>& facets() const { return facets_; }
  bool is_empty() const { return facets_.empty(); }
  /// Largest facet dimension; -1 for {empty simplex}; throws Errc::empty_complex when there are no faces.
  int dim() const;
  bool contains(const Simplex& s) const;

  /// Every face including the empty simplex, sorted by (cardinality, lexicographic).
  std::vector<Simplex> all_faces() const;
  /// Faces with at most d + 1 vertices; d >= -1.
  SimplicialComplex skeleton(int d) const;

  friend bool operator==(const SimplicialComplex& lhs, const SimplicialComplex& rhs) = default;

 private:
  unsigned n_ = 0;
  std::vector<Simplex> facets_;
};

/// Disjoint union with the vertices of component i shifted past those of
/// components 0..i-1.
struct DisjointUnion {
  SimplicialComplex complex;
  /// component_vertices[i] lists the (shifted) vertices belonging to component i.
  std::vector<std::vector<Vertex>> component_vertices;
};

DisjointUnion disjoint_union(const std::vector<SimplicialComplex>& parts);

/// Complex file format: `n=<int>` then one facet per line as comma-separated
/// vertices. Blank lines and `#` comments are ignored; an empty facet line
/// can be written as `{}`.
SimplicialComplex parse_complex(std::string_view text);
SimplicialComplex read_complex_file(const std::string& path);
std::string format_complex(const SimplicialComplex& k);

}  // namespace kzero
