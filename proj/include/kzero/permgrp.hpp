#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kzero/class_poly.hpp"

namespace kzero {

/// Bijection of {1..n}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  /// images[i-1] is the image of i. Throws Errc::invalid_argument if not a bijection of {1..n}.
  explicit Permutation(std::vector<unsigned> images);

  static Permutation identity(unsigned n);
  /// Parses cycle notation such as `(1 2)(3 4)`; `()` is the identity and fixed points may be omitted.
  static Permutation from_cycles(std::string_view text, unsigned n);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  const std::vector<unsigned>& images() const { return images_; }
  unsigned operator()(unsigned i) const { return images_[i - 1]; }
  bool is_identity() const;

  Permutation inverse() const;
  /// Number of disjoint cycles, fixed points included.
  unsigned num_cycles() const;

  /// Composition, right factor applied first: (p * q)(i) = p(q(i)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<unsigned> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Cycle notation with fixed points omitted; the identity prints as `()`.
std::string to_string(const Permutation& p);

/// A partition of n: parts in weakly decreasing order.
struct Partition {
  std::vector<unsigned> parts;

  unsigned n() const;
  /// Number of parts, written |lambda|.
  std::size_t length() const { return parts.size(); }
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

std::string to_string(const Partition& p);

Partition cycle_type(const Permutation& p);

/// A permutation of {1..n} with the given cycle type.
Permutation permutation_of_type(const Partition& lambda);

struct PartitionCount {
  Partition partition;
  /// Number of permutations of S_n with this cycle type.
  Integer count;
};

/// All partitions of n with their class sizes in S_n, partitions in
/// decreasing lexicographic order. Throws Errc::degree_too_large when n > cap.
std::vector<PartitionCount> partitions_with_counts(unsigned n, unsigned cap = 12);

/// Finite subgroup of S_n with every element enumerated.
class PermGroup {
 public:
  unsigned degree() const { return n_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  /// All elements, sorted lexicographically by images.
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Permutation& p) const { return index_.count(p) != 0; }
  std::optional<std::size_t> index_of(const Permutation& p) const;

  friend PermGroup close_group(unsigned n, const std::vector<Permutation>& gens, std::size_t cap);
  friend PermGroup subgroup_from_elements(unsigned n, std::vector<Permutation> elements);

 private:
  unsigned n_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

inline constexpr std::size_t default_group_cap = 1'000'000;

/// Enumerates <gens> by closure. Throws Errc::order_cap_exceeded past `cap`
/// elements and Errc::invalid_argument on a generator of the wrong degree.
PermGroup close_group(unsigned n, const std::vector<Permutation>& gens, std::size_t cap = default_group_cap);

/// Wraps an element list already closed under products; picks a small generating set.
PermGroup subgroup_from_elements(unsigned n, std::vector<Permutation> elements);

PermGroup symmetric_group(unsigned n);
/// Generated by the n-cycle (1 2 ... n).
PermGroup cyclic_group(unsigned n);

struct ConjugacyClass {
  Permutation representative;  // smallest member
  std::size_t size;
};

/// Classes in order of their smallest members.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g);
PermGroup centralizer(const PermGroup& g, const Permutation& element);

inline constexpr unsigned default_coset_degree_cap = 8;

/// Number of left cosets tG of G in S_n fixed by sigma. Enumerates S_n;
/// throws Errc::degree_too_large when n exceeds `cap`.
Integer coset_chi(const PermGroup& g, const Permutation& sigma, unsigned cap = default_coset_degree_cap);

/// [SP^d(X)] = C(p + d - 1, d).
ClassPoly symmetric_product_class(const ClassPoly& p, unsigned d);
/// [X^n / G] = (1/|G|) sum_{g in G} p^{#cycles(g)}.
ClassPoly burnside_quotient_class(const PermGroup& g, const ClassPoly& p);
/// (1/n!) sum_lambda h_lambda chi^G_lambda p^{|lambda|}.
ClassPoly permutation_product_class(const PermGroup& g, const ClassPoly& p,
                                    unsigned cap = default_coset_degree_cap);
/// (1/n) sum_{d | n} phi(d) p^{n/d}.
ClassPoly cyclic_product_class(unsigned n, const ClassPoly& p);

/// Group file: `degree <n>` and `generator [<name>] <cycles>` lines; `#` comments.
PermGroup parse_group(std::string_view text, std::size_t cap = default_group_cap);
PermGroup read_group_file(const std::string& path, std::size_t cap = default_group_cap);

}  // namespace kzero
