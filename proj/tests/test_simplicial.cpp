#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "kzero/posets.hpp"
#include "kzero/simplicial.hpp"
#include "oracles.hpp"

using namespace kzero;

namespace {

SimplicialComplex five_vertex() { return SimplicialComplex::from_facets(5, {{1, 2, 3}, {3, 4}, {3, 5}}); }

// All subsets of {1..n} that lie in some facet, by bitmask enumeration.
std::vector<Simplex> faces_by_brute_force(const SimplicialComplex& k, int max_dim) {
  std::vector<Simplex> out;
  if (k.is_empty()) return out;
  for (std::uint32_t mask = 0; mask < (1u << k.n()); ++mask) {
    std::vector<Vertex> vs;
    for (unsigned v = 0; v < k.n(); ++v)
      if (mask >> v & 1u) vs.push_back(v + 1);
    if (static_cast<int>(vs.size()) - 1 <= max_dim && oracle::is_face(k, vs)) out.emplace_back(vs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("simplicial") {
  TEST_CASE("simplex basics") {
    Simplex s{3, 1, 2, 3};
    CHECK(s.vertices() == std::vector<Vertex>{1, 2, 3});
    CHECK(s.dim() == 2);
    CHECK(Simplex{}.dim() == -1);
    CHECK(Simplex{1, 3}.is_subset_of(s));
    CHECK_FALSE(Simplex{4}.is_subset_of(s));
    CHECK(s.intersect(Simplex{3, 4}) == Simplex{3});
    CHECK(Simplex{5} < Simplex{1, 2});
    CHECK(to_string(s) == "[1,2,3]");
    CHECK(to_string(Simplex{}) == "[]");
  }

  TEST_CASE("from_facets") {
    auto k = five_vertex();
    CHECK(k.facets().size() == 3);
    CHECK(k.dim() == 2);
    auto absorbed = SimplicialComplex::from_facets(3, {{1}, {1, 2}});
    CHECK(absorbed.facets() == std::vector<Simplex>{{1, 2}});
    auto empty = SimplicialComplex::from_facets(2, {});
    CHECK(empty.is_empty());
    CHECK(empty.all_faces().empty());
    CHECK(throws_code([&] { empty.dim(); }, Errc::empty_complex));
    CHECK(throws_code([] { SimplicialComplex::from_facets(3, {{1, 4}}); }, Errc::vertex_out_of_range));
    CHECK(throws_code([] { SimplicialComplex::from_facets(3, {{0}}); }, Errc::vertex_out_of_range));
    auto only_empty = SimplicialComplex::from_facets(3, {Simplex{}});
    CHECK(only_empty.dim() == -1);
    CHECK(only_empty.all_faces() == std::vector<Simplex>{Simplex{}});
  }

  TEST_CASE("faces") {
    auto faces = five_vertex().all_faces();
    CHECK(faces.size() == 12);
    std::vector<Simplex> expected{{}, {1}, {2}, {3}, {4}, {5}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {1, 2, 3}};
    CHECK(faces == expected);
    auto vertex = SimplicialComplex::from_facets(1, {{1}});
    CHECK(vertex.all_faces() == std::vector<Simplex>{{}, {1}});
    CHECK(SimplicialComplex::full_simplex(4).all_faces().size() == 16);
    CHECK(five_vertex().contains(Simplex{2, 3}));
    CHECK_FALSE(five_vertex().contains(Simplex{4, 5}));
  }

  TEST_CASE("skeleton") {
    auto k = SimplicialComplex::full_simplex(3).skeleton(0);
    CHECK(k == SimplicialComplex::discrete(3));
    CHECK(five_vertex().skeleton(1).facets().size() == 5);
    CHECK(five_vertex().skeleton(-1).facets() == std::vector<Simplex>{Simplex{}});
    CHECK(five_vertex().skeleton(7) == five_vertex());
  }

  TEST_CASE("disjoint union") {
    auto edge = SimplicialComplex::from_facets(2, {{1, 2}});
    auto u = disjoint_union({edge, edge});
    CHECK(u.complex.n() == 4);
    CHECK(u.complex.facets() == std::vector<Simplex>{{1, 2}, {3, 4}});
    CHECK(u.component_vertices == std::vector<std::vector<Vertex>>{{1, 2}, {3, 4}});
    auto two_points = SimplicialComplex::discrete(2);
    auto t = disjoint_union({two_points, two_points, two_points});
    CHECK(t.complex.n() == 6);
    CHECK(t.complex.facets().size() == 6);
  }

  TEST_CASE("file format") {
    auto k = parse_complex("# example\nn=5\n1,2,3\n3, 4\n\n3,5  # last\n");
    CHECK(k == five_vertex());
    CHECK(parse_complex(format_complex(k)) == k);
    CHECK(parse_complex("n=2\n{}\n").facets() == std::vector<Simplex>{Simplex{}});
    CHECK(parse_complex("n=3\n").is_empty());
    CHECK(throws_code([] { parse_complex("1,2\n"); }, Errc::parse_error));
    CHECK(throws_code([] { parse_complex("n=3\n1,x\n"); }, Errc::parse_error));
    CHECK(throws_code([] { parse_complex("n=3\n1,,2\n"); }, Errc::parse_error));
    CHECK(throws_code([] { parse_complex("n=3\n1,5\n"); }, Errc::vertex_out_of_range));
    CHECK(throws_code([] { read_complex_file("/nonexistent/k.cplx"); }, Errc::parse_error));
  }

  TEST_CASE("skeleton and faces against brute force") {
    std::mt19937_64 rng(707);
    for (int i = 0; i < 150; ++i) {
      unsigned n = 1 + static_cast<unsigned>(rng() % 7);
      auto k = oracle::random_complex(rng, n);
      CHECK(k.all_faces() == faces_by_brute_force(k, 64));
      for (int d = -1; d <= static_cast<int>(n); ++d) {
        CHECK(k.skeleton(d).all_faces() == faces_by_brute_force(k, d));
      }
      auto rebuilt = SimplicialComplex::from_facets(n, k.all_faces());
      CHECK(rebuilt == k);
    }
  }
}

TEST_SUITE("posets") {
  TEST_CASE("five-vertex example poset") {
    auto poset = build_intersection_poset(five_vertex());
    REQUIRE(poset.size() == 5);
    CHECK(poset.nodes()[0].mobius == 1);
    CHECK_FALSE(poset.nodes()[0].vertex_set.has_value());
    std::map<Simplex, long> mu;
    for (std::size_t i = 1; i < poset.size(); ++i) mu[*poset.nodes()[i].vertex_set] = poset.nodes()[i].mobius.get_si();
    CHECK(mu == std::map<Simplex, long>{{{1, 2, 3}, -1}, {{3, 4}, -1}, {{3, 5}, -1}, {{3}, 2}});
    auto three = *poset.find(Simplex{3});
    CHECK(poset.below(0, three));
    CHECK(poset.below(*poset.find(Simplex{3, 4}), three));
    CHECK_FALSE(poset.below(three, 0));
    CHECK(poset.atoms().size() == 3);
  }

  TEST_CASE("small posets") {
    auto single = build_intersection_poset(SimplicialComplex::from_facets(3, {{1, 2}}));
    REQUIRE(single.size() == 2);
    CHECK(single.nodes()[1].mobius == -1);
    auto disjoint = build_intersection_poset(SimplicialComplex::from_facets(4, {{1, 2}, {3, 4}}));
    REQUIRE(disjoint.size() == 4);
    CHECK(disjoint.nodes()[*disjoint.find(Simplex{})].mobius == 1);
    CHECK(throws_code([] { build_intersection_poset(SimplicialComplex::from_facets(3, {})); }, Errc::empty_complex));
  }

  TEST_CASE("line graph poset") {
    auto line = SimplicialComplex::from_facets(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    auto poset = build_intersection_poset(line);
    CHECK(poset.size() == 1 + 4 + 3 + 1);
    CHECK(poset.nodes()[*poset.find(Simplex{3})].mobius == 1);
    CHECK(poset.nodes()[*poset.find(Simplex{})].mobius == 0);
  }

  TEST_CASE("inclusion exclusion on the five-vertex example") {
    auto poset = build_intersection_poset(five_vertex());
    auto class_of = [](const Simplex& s) {
      unsigned size = static_cast<unsigned>(s.size());
      return P("x").pow(size) * P("a").pow(5 - size);
    };
    CHECK(inclusion_exclusion(poset, class_of, P("x^5")) == P("x^5 - x^3*a^2 - 2*x^2*a^3 + 2*x*a^4"));
    auto whole = build_intersection_poset(SimplicialComplex::full_simplex(3));
    CHECK(inclusion_exclusion(whole, [](const Simplex&) { return P("x^3"); }, P("x^3")).is_zero());
  }

  TEST_CASE("rendering") {
    std::string text = format_poset(build_intersection_poset(five_vertex()));
    CHECK(text.find("0^  mu=1") == 0);
    CHECK(text.find("[3]  mu=2  covers") != std::string::npos);
  }

  TEST_CASE("mobius sums vanish above the bottom") {
    std::mt19937_64 rng(808);
    for (int i = 0; i < 200; ++i) {
      auto k = oracle::random_complex(rng, 1 + static_cast<unsigned>(rng() % 7));
      auto poset = build_intersection_poset(k);
      for (std::size_t x = 1; x < poset.size(); ++x) {
        Integer sum = poset.nodes()[x].mobius;
        for (std::size_t y = 0; y < poset.size(); ++y)
          if (poset.below(y, x)) sum += poset.nodes()[y].mobius;
        CHECK(sum == 0);
      }
      // Every pairwise intersection of nodes is a node, and the order is reverse inclusion.
      for (std::size_t a = 1; a < poset.size(); ++a) {
        for (std::size_t b = 1; b < poset.size(); ++b) {
          const auto& sa = *poset.nodes()[a].vertex_set;
          const auto& sb = *poset.nodes()[b].vertex_set;
          CHECK(poset.find(sa.intersect(sb)).has_value());
          CHECK(poset.below(a, b) == (sb.is_subset_of(sa) && sa != sb));
        }
      }
    }
  }
}
