#pragma once

// Brute-force references used only by the tests. Classes are checked through
// point counts: a finite set of s points has class s, and every class formula
// in the library is a polynomial identity that also holds for finite sets.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "kzero/class_poly.hpp"
#include "kzero/class_series.hpp"
#include "kzero/permgrp.hpp"
#include "kzero/quotients.hpp"
#include "kzero/simplicial.hpp"

namespace oracle {

using kzero::ClassPoly;
using kzero::Integer;
using kzero::Permutation;
using kzero::PermGroup;
using kzero::Rational;
using kzero::Simplex;
using kzero::SimplicialComplex;
using Tuple = std::vector<unsigned>;

// Calls f on every tuple in {0..s-1}^n.
inline void for_each_tuple(unsigned n, unsigned s, const std::function<void(const Tuple&)>& f) {
  if (s == 0 && n > 0) return;
  Tuple t(n, 0);
  while (true) {
    f(t);
    unsigned i = 0;
    while (i < n && ++t[i] == s) t[i++] = 0;
    if (i == n) return;
  }
}

inline bool is_face(const SimplicialComplex& k, const std::vector<unsigned>& vertices) {
  for (const auto& facet : k.facets()) {
    if (std::all_of(vertices.begin(), vertices.end(), [&](unsigned v) { return facet.contains(v); })) return true;
  }
  return false;
}

// |(X,A)^K| with X = {0..s-1}, A = {0..t-1}.
inline Integer polyhedral_count(const SimplicialComplex& k, unsigned s, unsigned t) {
  Integer count = 0;
  for_each_tuple(k.n(), s, [&](const Tuple& x) {
    std::vector<unsigned> outside;
    for (unsigned i = 0; i < x.size(); ++i) {
      if (x[i] >= t) outside.push_back(i + 1);
    }
    if (is_face(k, outside)) ++count;
  });
  return count;
}

// |Delta_K(X)|: tuples whose coordinates outside some facet all coincide.
inline Integer delta_count(const SimplicialComplex& k, unsigned s) {
  Integer count = 0;
  for_each_tuple(k.n(), s, [&](const Tuple& x) {
    for (const auto& facet : k.facets()) {
      std::set<unsigned> values;
      for (unsigned i = 1; i <= k.n(); ++i) {
        if (!facet.contains(i)) values.insert(x[i - 1]);
      }
      if (values.size() <= 1) {
        ++count;
        return;
      }
    }
  });
  return count;
}

// Tuples with at least d coordinates equal to the basepoint 0.
inline Integer fat_wedge_count(unsigned n, unsigned d, unsigned s) {
  Integer count = 0;
  for_each_tuple(n, s, [&](const Tuple& x) {
    if (static_cast<unsigned>(std::count(x.begin(), x.end(), 0u)) >= d) ++count;
  });
  return count;
}

// Tuples whose last coordinate differs from all others.
inline Integer w_count(unsigned n, unsigned s) {
  Integer count = 0;
  for_each_tuple(n, s, [&](const Tuple& x) {
    if (std::count(x.begin(), x.end(), x.back()) == 1) ++count;
  });
  return count;
}

// Orbits of G on {0..s-1}^n by explicit canonical representatives.
inline Integer orbit_count(const PermGroup& g, unsigned s) {
  std::set<Tuple> reps;
  const unsigned n = g.degree();
  for_each_tuple(n, s, [&](const Tuple& x) {
    Tuple best;
    for (const auto& p : g.elements()) {
      Tuple y(n);
      for (unsigned i = 1; i <= n; ++i) y[p(i) - 1] = x[i - 1];
      if (best.empty() || y < best) best = y;
    }
    reps.insert(best);
  });
  return Integer(static_cast<unsigned long>(reps.size()));
}

// Multisets of size d on s points.
inline Integer multiset_count(unsigned s, unsigned d) {
  Integer count = 0;
  for_each_tuple(d, s, [&](const Tuple& x) {
    if (std::is_sorted(x.begin(), x.end())) ++count;
  });
  return count;
}

// |Z_n^d(X)| for |X| = s: m-tuples of multisets with sizes d_i such that no
// point has multiplicity >= n in every one of them.
inline Integer zero_cycle_count(const std::vector<unsigned>& d, unsigned n, unsigned s) {
  const auto m = d.size();
  // All multiplicity vectors on s points with total d_i, per color.
  auto compositions = [&](unsigned total) {
    std::vector<Tuple> out;
    for_each_tuple(s, total + 1, [&](const Tuple& x) {
      if (std::accumulate(x.begin(), x.end(), 0u) == total) out.push_back(x);
    });
    return out;
  };
  std::vector<std::vector<Tuple>> per_color;
  for (unsigned di : d) per_color.push_back(compositions(di));
  Integer count = 0;
  std::vector<std::size_t> idx(m, 0);
  if (std::any_of(per_color.begin(), per_color.end(), [](const auto& v) { return v.empty(); })) return 0;
  while (true) {
    bool ok = true;
    for (unsigned point = 0; point < s && ok; ++point) {
      bool all = true;
      for (std::size_t c = 0; c < m; ++c) all = all && per_color[c][idx[c]][point] >= n;
      ok = !all;
    }
    if (ok) ++count;
    std::size_t c = 0;
    while (c < m && ++idx[c] == per_color[c].size()) idx[c++] = 0;
    if (c == m) break;
  }
  return count;
}

// Leibniz expansion.
inline Rational leibniz_determinant(const std::vector<Rational>& m, unsigned dim) {
  std::vector<unsigned> perm(dim);
  std::iota(perm.begin(), perm.end(), 0u);
  Rational total = 0;
  do {
    Rational term = 1;
    for (unsigned i = 0; i < dim; ++i) term *= m[i * dim + perm[i]];
    unsigned inversions = 0;
    for (unsigned i = 0; i < dim; ++i)
      for (unsigned j = i + 1; j < dim; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    total += inversions % 2 ? Rational(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Solves (L - I) v = -b by Cramer-free elimination on the augmented system and
// reports whether the solution set is exactly one point.
inline bool unique_fixed_point_by_solving(const kzero::AffineMap& f) {
  const std::size_t n = f.dim;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = f.linear[i * n + j] - (i == j ? 1 : 0);
    a[i][n] = -f.translation[i];
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t p = rank;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      Rational factor = a[r][col] / a[rank][col];
      for (std::size_t k = col; k <= n; ++k) a[r][k] -= factor * a[rank][k];
    }
    ++rank;
  }
  return rank == n;
}

// Euler characteristic of R^2 / p2 by counting orbits of cells. The plane is
// cut into squares of side 1/2; in doubled coordinates a cell is (type, i, j)
// with type 0 = vertex (i,j), 1 = edge (i,j)-(i+1,j), 2 = edge (i,j)-(i,j+1),
// 3 = square with corner (i,j). The group is generated by translations by
// (2,0), (0,2) in doubled coordinates and the half-turn v -> -v.
inline Integer p2_cell_chi() {
  struct Cell {
    int type, i, j;
    auto operator<=>(const Cell&) const = default;
  };
  auto reduce = [](Cell c) {
    c.i = ((c.i % 2) + 2) % 2;
    c.j = ((c.j % 2) + 2) % 2;
    return c;
  };
  auto half_turn = [&](Cell c) {
    switch (c.type) {
      case 0: return reduce({0, -c.i, -c.j});
      case 1: return reduce({1, -c.i - 1, -c.j});
      case 2: return reduce({2, -c.i, -c.j - 1});
      default: return reduce({3, -c.i - 1, -c.j - 1});
    }
  };
  std::set<Cell> seen;
  Integer chi = 0;
  for (int type = 0; type < 4; ++type) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        Cell c{type, i, j};
        if (seen.count(c)) continue;
        seen.insert(c);
        seen.insert(half_turn(c));
        int dim = type == 0 ? 0 : (type == 3 ? 2 : 1);
        chi += dim == 1 ? -1 : 1;
      }
    }
  }
  return chi;
}

// Random generators with explicit seeds.

inline ClassPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, unsigned max_terms = 4,
                             unsigned max_exp = 3) {
  std::uniform_int_distribution<int> coeff(-6, 6), den(1, 4), exp(0, static_cast<int>(max_exp));
  std::uniform_int_distribution<unsigned> terms(0, max_terms);
  ClassPoly p;
  unsigned count = terms(rng);
  for (unsigned t = 0; t < count; ++t) {
    Rational c(coeff(rng), den(rng));
    c.canonicalize();
    ClassPoly mono = ClassPoly::constant(c);
    for (const auto& v : vars) mono *= ClassPoly::variable(v).pow(static_cast<unsigned>(exp(rng)));
    p += mono;
  }
  return p;
}

inline SimplicialComplex random_complex(std::mt19937_64& rng, unsigned n, unsigned max_facets = 5) {
  std::uniform_int_distribution<unsigned> facet_count(1, max_facets);
  std::uniform_int_distribution<std::uint32_t> mask_dist(0, (1u << n) - 1);
  std::vector<Simplex> facets;
  unsigned count = facet_count(rng);
  for (unsigned f = 0; f < count; ++f) {
    std::uint32_t mask = mask_dist(rng);
    std::vector<kzero::Vertex> vs;
    for (unsigned v = 0; v < n; ++v) {
      if (mask >> v & 1u) vs.push_back(v + 1);
    }
    facets.emplace_back(vs);
  }
  return SimplicialComplex::from_facets(n, facets);
}

inline Permutation random_permutation(std::mt19937_64& rng, unsigned n) {
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 1u);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

inline PermGroup random_subgroup(std::mt19937_64& rng, unsigned n, unsigned max_gens = 2) {
  std::uniform_int_distribution<unsigned> gen_count(0, max_gens);
  std::vector<Permutation> gens;
  unsigned count = gen_count(rng);
  for (unsigned i = 0; i < count; ++i) gens.push_back(random_permutation(rng, n));
  return kzero::close_group(n, gens);
}

// Random finite stratified space: strata are G-orbits of points, unordered
// pairs and ordered pairs of the natural G-set {1..n}, each orbit with one
// random class.
inline kzero::StratifiedGSpace random_space(std::mt19937_64& rng, unsigned max_strata = 20) {
  std::uniform_int_distribution<unsigned> degree_dist(1, 5);
  unsigned n = degree_dist(rng);
  PermGroup g = random_subgroup(rng, n, 2);
  while (g.order() > 120) g = random_subgroup(rng, n, 1);

  std::vector<std::vector<unsigned>> objects;
  for (unsigned i = 1; i <= n; ++i) objects.push_back({i});
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j) objects.push_back({0, i, j});
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j)
      if (i != j) objects.push_back({i, j});
  auto act = [](const Permutation& p, std::vector<unsigned> o) {
    if (o.size() == 3) {
      unsigned a = p(o[1]), b = p(o[2]);
      return std::vector<unsigned>{0, std::min(a, b), std::max(a, b)};
    }
    for (auto& v : o) v = p(v);
    return o;
  };

  // Pick whole orbits at random until the stratum budget is used.
  std::vector<std::vector<unsigned>> chosen;
  std::set<std::vector<unsigned>> used;
  std::bernoulli_distribution take(0.5);
  std::vector<std::string> vars{"x", "y"};
  std::vector<ClassPoly> classes;
  std::shuffle(objects.begin(), objects.end(), rng);
  for (const auto& o : objects) {
    if (used.count(o)) continue;
    std::set<std::vector<unsigned>> orbit;
    for (const auto& p : g.elements()) orbit.insert(act(p, o));
    for (const auto& q : orbit) used.insert(q);
    if (chosen.size() + orbit.size() > max_strata || !take(rng)) continue;
    ClassPoly cls = random_poly(rng, vars, 2, 2);
    for (const auto& q : orbit) {
      chosen.push_back(q);
      classes.push_back(cls);
    }
  }
  if (chosen.empty()) {
    chosen.push_back({1});
    classes.push_back(ClassPoly::one());
    std::set<std::vector<unsigned>> orbit;
    for (const auto& p : g.elements()) orbit.insert(act(p, {1}));
    for (const auto& q : orbit) {
      if (q != std::vector<unsigned>{1}) {
        chosen.push_back(q);
        classes.push_back(ClassPoly::one());
      }
    }
  }

  std::map<std::vector<unsigned>, unsigned> index;
  std::vector<kzero::Stratum> strata;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    index[chosen[i]] = static_cast<unsigned>(i + 1);
    strata.push_back({"s" + std::to_string(i + 1), classes[i]});
  }
  std::vector<kzero::GeneratorAction> gens;
  for (const auto& gen : g.generators()) {
    std::vector<unsigned> images;
    for (const auto& o : chosen) images.push_back(index.at(act(gen, o)));
    gens.push_back({gen, Permutation(images)});
  }
  return kzero::StratifiedGSpace::create(std::move(strata), n, gens);
}

}  // namespace oracle
