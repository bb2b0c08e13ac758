#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "kzero/quotients.hpp"
#include "kzero/text_formats.hpp"
#include "oracles.hpp"

using namespace kzero;

namespace {

const char* circle_text = R"(# circle as four vertices and four arcs
degree 2
stratum v1 class=1
stratum v2 class=1
stratum v3 class=1
stratum v4 class=1
stratum a12 class=-1
stratum a23 class=-1
stratum a34 class=-1
stratum a41 class=-1
generator t (1 2)
action t (v2 v4)(a12 a41)(a23 a34)
)";

const char* dihedral_text = R"(id [0] class=1 c=2
id ]0,1[ class=-1 c=1
id [1/2] class=1 c=2
tau [0] class=1 c=2
g.tau [1/2] class=1 c=2
)";

AffineMap affine(std::size_t dim, std::vector<long> linear, std::vector<long> translation) {
  AffineMap f{dim, {}, {}};
  for (long v : linear) f.linear.push_back(Rational(v));
  for (long v : translation) f.translation.push_back(Rational(v));
  return f;
}

}  // namespace

TEST_SUITE("quotients") {
  TEST_CASE("circle modulo a reflection") {
    auto sp = parse_space(circle_text);
    CHECK(sp.group().order() == 2);
    CHECK(orbit_sum_class(sp) == ClassPoly::one());
    CHECK(burnside_check_class(sp) == ClassPoly::one());
    CHECK(mainaction_class_finite(sp) == ClassPoly::one());
  }

  TEST_CASE("small spaces") {
    auto t = Permutation::from_cycles("(1 2)", 2);
    auto swap = StratifiedGSpace::create({{"s", P("p")}, {"u", P("p")}}, 2, {{t, Permutation::from_cycles("(1 2)", 2)}});
    CHECK(orbit_sum_class(swap) == P("p"));
    CHECK(burnside_check_class(swap) == P("p"));
    CHECK(mainaction_class_finite(swap) == P("p"));
    auto trivial_action = StratifiedGSpace::create({{"s", P("p")}}, 2, {{t, Permutation::identity(1)}});
    CHECK(orbit_sum_class(trivial_action) == P("p"));
    CHECK(burnside_check_class(trivial_action) == P("p"));
    CHECK(mainaction_class_finite(trivial_action) == P("p"));
    auto trivial_group = StratifiedGSpace::create({{"s", P("x")}, {"u", P("y")}}, 1, {});
    CHECK(orbit_sum_class(trivial_group) == P("x + y"));
    CHECK(burnside_check_class(trivial_group) == P("x + y"));
    CHECK(mainaction_class_finite(trivial_group) == P("x + y"));
  }

  TEST_CASE("invalid actions") {
    auto c3 = Permutation::from_cycles("(1 2 3)", 3);
    // A 3-cycle cannot act as a transposition.
    CHECK(throws_code(
        [&] { StratifiedGSpace::create({{"s", P("1")}, {"u", P("1")}}, 3, {{c3, Permutation::from_cycles("(1 2)", 2)}}); },
        Errc::invalid_argument));
    auto t = Permutation::from_cycles("(1 2)", 2);
    CHECK(throws_code(
        [&] { StratifiedGSpace::create({{"s", P("1")}, {"u", P("x")}}, 2, {{t, Permutation::from_cycles("(1 2)", 2)}}); },
        Errc::invalid_argument));
    CHECK(throws_code([&] { StratifiedGSpace::create({{"s", P("1")}}, 2, {{t, Permutation::identity(2)}}); },
                      Errc::dimension_mismatch));
  }

  TEST_CASE("three routes agree on generated spaces") {
    std::mt19937_64 rng(1904);
    for (int i = 0; i < 100; ++i) {
      auto sp = oracle::random_space(rng);
      REQUIRE(sp.strata().size() <= 20);
      REQUIRE(sp.group().order() <= 120);
      ClassPoly orbits = orbit_sum_class(sp);
      CHECK(burnside_check_class(sp) == orbits);
      CHECK(mainaction_class_finite(sp) == orbits);
    }
  }

  TEST_CASE("descriptors") {
    CHECK(mainaction_class_descriptor(parse_descriptor(dihedral_text)) == ClassPoly::one());
    CHECK(mainaction_class_descriptor(ActionDescriptor{}).is_zero());
    ActionDescriptor single{{{"g", {{"S", P("p"), 1}}}}};
    CHECK(mainaction_class_descriptor(single) == P("p"));
    ActionDescriptor bad{{{"g", {{"S", P("p"), 0}}}}};
    CHECK(throws_code([&] { mainaction_class_descriptor(bad); }, Errc::invalid_argument));
    auto d = parse_descriptor("e S class=x^2 - 1 c=3\n");
    REQUIRE(d.entries.size() == 1);
    CHECK(d.entries[0].strata[0].cls == P("x^2 - 1"));
    CHECK(d.entries[0].strata[0].c_order == 3);
    CHECK(throws_code([] { parse_descriptor("e S class=x\n"); }, Errc::parse_error));
    CHECK(throws_code([] { parse_descriptor("e S class=x c=two\n"); }, Errc::parse_error));
  }

  TEST_CASE("orbifold euler characteristics") {
    std::vector<OrbifoldCell> fundamental{{0, 2}, {1, 1}, {0, 2}};
    CHECK(orbifold_euler(fundamental) == 0);
    CHECK(orbifold_euler({}) == 0);
    for (int d = 0; d <= 4; ++d) {
      std::vector<OrbifoldCell> cell{{d, 1}};
      CHECK(orbifold_euler(cell) == (d % 2 ? -1 : 1));
    }
    std::vector<std::vector<OrbifoldCell>> akita{fundamental, {{0, 2}}, {{0, 2}}};
    CHECK(akita_chi(akita) == 1);
    CHECK(akita_chi({}) == 0);
    std::vector<std::vector<OrbifoldCell>> free_points{{{0, 1}}};
    CHECK(akita_chi(free_points) == 1);
    auto cells = parse_orbifold_cells("id dim=0 stab=2\nid dim=1 stab=1\nid dim=0 stab=2\ntau dim=0 stab=2\n");
    REQUIRE(cells.size() == 2);
    CHECK(orbifold_euler(cells[0].cells) == 0);
    CHECK(throws_code([] { parse_orbifold_cells("id dim=x stab=2\n"); }, Errc::parse_error));
    CHECK(throws_code([] { std::vector<OrbifoldCell> c{{0, 0}}; orbifold_euler(c); }, Errc::invalid_argument));
  }

  TEST_CASE("orbifold euler characteristic of finite actions") {
    // For a finite group, e(G, X) = chi(X) / |G|; for a free action this is the
    // cell count of the quotient.
    std::mt19937_64 rng(2008);
    for (int i = 0; i < 60; ++i) {
      auto sp = oracle::random_space(rng);
      const auto count = static_cast<unsigned>(sp.strata().size());
      const auto order = sp.group().order();
      std::vector<int> dim_of_orbit(count, -1);
      std::vector<OrbifoldCell> reps;
      Integer chi = 0;
      for (unsigned s = 1; s <= count; ++s) {
        if (dim_of_orbit[s - 1] >= 0) continue;
        int dim = static_cast<int>(rng() % 3);
        unsigned long stab = 0;
        for (std::size_t g = 0; g < order; ++g) {
          unsigned image = sp.action(g)(s);
          dim_of_orbit[image - 1] = dim;
          stab += image == s ? 1 : 0;
        }
        reps.push_back({dim, Integer(stab)});
      }
      for (unsigned s = 0; s < count; ++s) chi += dim_of_orbit[s] % 2 ? -1 : 1;
      CHECK(orbifold_euler(reps) == Rational(chi) / Rational(Integer(static_cast<unsigned long>(order))));
    }
    // Z/k rotating a k-gon: one vertex orbit and one edge orbit, both free; the quotient is a circle.
    std::vector<OrbifoldCell> polygon{{0, 1}, {1, 1}};
    CHECK(orbifold_euler(polygon) == 0);
  }

  TEST_CASE("crystallographic groups") {
    CHECK(crystal_chi({}).chi == 0);
    auto p2 = parse_crystal("r00 centralizer=2\nr10 centralizer=2\nr01 centralizer=2\nr11 centralizer=2\n");
    auto result = crystal_chi(p2);
    CHECK(result.chi == 2);
    CHECK(result.cls == ClassPoly::constant(2));
    CHECK_FALSE(result.warning.has_value());
    CHECK(result.chi == oracle::p2_cell_chi());
    std::vector<CentralIsometryClass> one{{"g", 1}};
    CHECK(crystal_chi(one).chi == 1);
    std::vector<CentralIsometryClass> odd{{"g", 3}};
    CHECK(crystal_chi(odd).warning.has_value());
    CHECK(throws_code([] { std::vector<CentralIsometryClass> z{{"g", 0}}; crystal_chi(z); }, Errc::invalid_argument));
  }

  TEST_CASE("crystal sums are linear") {
    std::mt19937_64 rng(2005);
    for (int i = 0; i < 50; ++i) {
      std::vector<CentralIsometryClass> classes;
      unsigned count = static_cast<unsigned>(rng() % 8);
      for (unsigned j = 0; j < count; ++j) classes.push_back({"c" + std::to_string(j), 1 + static_cast<long>(rng() % 12)});
      Rational whole = crystal_chi(classes).chi;
      auto shuffled = classes;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      CHECK(crystal_chi(shuffled).chi == whole);
      std::size_t cut = count ? rng() % (count + 1) : 0;
      std::span<const CentralIsometryClass> all(classes);
      CHECK(crystal_chi(all.first(cut)).chi + crystal_chi(all.subspan(cut)).chi == whole);
    }
  }

  TEST_CASE("fixed points of affine maps") {
    CHECK_FALSE(has_unique_fixed_point(affine(2, {1, 0, 0, 1}, {0, 0})));
    CHECK(has_unique_fixed_point(affine(2, {-1, 0, 0, -1}, {0, 0})));
    CHECK_FALSE(has_unique_fixed_point(affine(2, {1, 0, 0, 1}, {1, 0})));
    CHECK(has_unique_fixed_point(affine(0, {}, {})));
    CHECK(throws_code([] { has_unique_fixed_point(affine(2, {1, 0, 0}, {0, 0})); }, Errc::dimension_mismatch));
    auto f = parse_affine_map("dim 2\nrow -1 0\nrow 0 -1\ntranslation 1/2 0\n");
    CHECK(has_unique_fixed_point(f));
    CHECK(f.translation[0] == Q(1, 2));
    CHECK(throws_code([] { parse_affine_map("dim 2\nrow 1 0\ntranslation 0 0\n"); }, Errc::dimension_mismatch));
    CHECK(throws_code([] { parse_affine_map("dim 2\nrow 1 0 0\n"); }, Errc::dimension_mismatch));
    CHECK(throws_code([] { parse_affine_map("row 1\n"); }, Errc::parse_error));
    CHECK(throws_code([] { parse_affine_map("dim 1\nrow x\n"); }, Errc::parse_error));
  }

  TEST_CASE("determinants against the leibniz formula") {
    std::mt19937_64 rng(2106);
    std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
    for (int i = 0; i < 200; ++i) {
      unsigned dim = 1 + static_cast<unsigned>(rng() % 4);
      std::vector<Rational> m;
      for (unsigned j = 0; j < dim * dim; ++j) m.push_back(Q(num(rng), den(rng)));
      CHECK(determinant(m, dim) == oracle::leibniz_determinant(m, dim));
    }
  }

  TEST_CASE("fixed points against solving") {
    std::mt19937_64 rng(2207);
    std::uniform_int_distribution<int> num(-2, 2), den(1, 2);
    for (int i = 0; i < 300; ++i) {
      std::size_t dim = 2 + rng() % 2;
      AffineMap f{dim, {}, {}};
      for (std::size_t j = 0; j < dim * dim; ++j) f.linear.push_back(Q(num(rng), den(rng)));
      // Bias towards singular linear parts: sometimes make L - I have a zero row.
      if (rng() % 3 == 0) {
        for (std::size_t j = 0; j < dim; ++j) f.linear[j] = j == 0 ? 1 : 0;
      }
      for (std::size_t j = 0; j < dim; ++j) f.translation.push_back(Q(num(rng), den(rng)));
      CHECK(has_unique_fixed_point(f) == oracle::unique_fixed_point_by_solving(f));
    }
  }

  TEST_CASE("space file errors") {
    CHECK(throws_code([] { parse_space("stratum a class=1\n"); }, Errc::parse_error));
    CHECK(throws_code([] { parse_space("degree 2\n"); }, Errc::parse_error));
    CHECK(throws_code([] { parse_space("degree 2\nstratum a class=1\nstratum a class=1\n"); }, Errc::parse_error));
    CHECK(throws_code([] { parse_space("degree 2\nstratum a class=1\naction t (a)\n"); }, Errc::parse_error));
    CHECK(throws_code([] { parse_space("degree 2\nstratum a class=1\ngenerator t (1 2)\naction t (a b)\n"); },
                      Errc::parse_error));
    CHECK(throws_code([] { parse_space("degree 2\nstratum a class=x^\n"); }, Errc::parse_error));
    CHECK(throws_code([] { read_space_file("/nonexistent.space"); }, Errc::parse_error));
  }
}
