#include "kzero/quotients.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "kzero/errors.hpp"

namespace kzero {

StratifiedGSpace StratifiedGSpace::create(std::vector<Stratum> strata, unsigned degree,
                                          const std::vector<GeneratorAction>& generators, std::size_t cap) {
  const auto count = static_cast<unsigned>(strata.size());
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.on_strata.degree() != count) {
      throw Error(Errc::dimension_mismatch, "generator " + to_string(g.element) + " acts on " +
                                                std::to_string(g.on_strata.degree()) + " strata, expected " +
                                                std::to_string(count));
    }
    gens.push_back(g.element);
  }

  StratifiedGSpace sp;
  sp.strata_ = std::move(strata);
  sp.group_ = close_group(degree, gens, cap);

  // Extend along the Cayley graph: action(s g) = action(s) action(g). Checking
  // every edge is a complete homomorphism test.
  std::vector<std::optional<Permutation>> actions(sp.group_.order());
  std::size_t id = *sp.group_.index_of(Permutation::identity(degree));
  actions[id] = Permutation::identity(count);
  std::deque<std::size_t> queue{id};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      std::size_t next = *sp.group_.index_of(g.element * sp.group_.elements()[cur]);
      Permutation image = g.on_strata * *actions[cur];
      if (!actions[next]) {
        actions[next] = std::move(image);
        queue.push_back(next);
      } else if (*actions[next] != image) {
        throw Error(Errc::invalid_argument, "stratum action is not a homomorphism (conflict at element " +
                                                to_string(sp.group_.elements()[next]) + ")");
      }
    }
  }
  sp.actions_.reserve(actions.size());
  for (auto& a : actions) sp.actions_.push_back(std::move(*a));

  for (const auto& g : generators) {
    for (unsigned s = 1; s <= count; ++s) {
      unsigned t = g.on_strata(s);
      if (sp.strata_[s - 1].cls != sp.strata_[t - 1].cls) {
        throw Error(Errc::invalid_argument, "strata '" + sp.strata_[s - 1].label + "' and '" +
                                                sp.strata_[t - 1].label + "' share an orbit but not a class");
      }
    }
  }
  return sp;
}

const Permutation& StratifiedGSpace::action_of(const Permutation& element) const {
  auto idx = group_.index_of(element);
  if (!idx) throw Error(Errc::invalid_argument, to_string(element) + " is not in the group");
  return actions_[*idx];
}

namespace {

// Orbit label per stratum (smallest index in the orbit) under the given actions.
std::vector<unsigned> orbit_roots(unsigned count, const std::vector<const Permutation*>& actions) {
  std::vector<unsigned> root(count);
  std::iota(root.begin(), root.end(), 0u);
  auto find = [&](unsigned v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const auto* a : actions) {
    for (unsigned s = 0; s < count; ++s) {
      unsigned x = find(s);
      unsigned y = find((*a)(s + 1) - 1);
      if (x != y) root[std::max(x, y)] = std::min(x, y);
    }
  }
  for (unsigned s = 0; s < count; ++s) root[s] = find(s);
  return root;
}

}  // namespace

ClassPoly orbit_sum_class(const StratifiedGSpace& sp) {
  const auto count = static_cast<unsigned>(sp.strata().size());
  std::vector<const Permutation*> actions;
  for (std::size_t i = 0; i < sp.group().order(); ++i) actions.push_back(&sp.action(i));
  auto root = orbit_roots(count, actions);
  ClassPoly total;
  for (unsigned s = 0; s < count; ++s) {
    if (root[s] == s) total += sp.strata()[s].cls;
  }
  return total;
}

ClassPoly burnside_check_class(const StratifiedGSpace& sp) {
  const auto count = static_cast<unsigned>(sp.strata().size());
  ClassPoly total;
  for (std::size_t i = 0; i < sp.group().order(); ++i) {
    const auto& a = sp.action(i);
    for (unsigned s = 1; s <= count; ++s) {
      if (a(s) == s) total += sp.strata()[s - 1].cls;
    }
  }
  return total / Integer(static_cast<unsigned long>(sp.group().order()));
}

ClassPoly mainaction_class_finite(const StratifiedGSpace& sp) {
  const auto count = static_cast<unsigned>(sp.strata().size());
  ClassPoly total;
  for (const auto& cls : conjugacy_classes(sp.group())) {
    const Permutation& g = cls.representative;
    const Permutation& g_action = sp.action_of(g);
    PermGroup cent = centralizer(sp.group(), g);

    std::vector<const Permutation*> cent_actions;
    for (const auto& h : cent.elements()) cent_actions.push_back(&sp.action_of(h));
    auto root = orbit_roots(count, cent_actions);

    for (unsigned s = 0; s < count; ++s) {
      // Representatives of C(g)-orbits on the strata fixed by g; X^g is C(g)-stable.
      if (root[s] != s || g_action(s + 1) != s + 1) continue;
      unsigned long stab = 0;
      for (const auto* h : cent_actions) stab += (*h)(s + 1) == s + 1 ? 1 : 0;
      total += sp.strata()[s].cls / Integer(stab);
    }
  }
  return total;
}

ClassPoly mainaction_class_descriptor(const ActionDescriptor& d) {
  ClassPoly total;
  for (const auto& entry : d.entries) {
    for (const auto& s : entry.strata) {
      if (s.c_order < 1) {
        throw Error(Errc::invalid_argument,
                    "centralizer order of stratum '" + s.label + "' for element '" + entry.element + "' must be >= 1");
      }
      total += s.cls / s.c_order;
    }
  }
  return total;
}

Rational orbifold_euler(std::span<const OrbifoldCell> cells) {
  Rational total = 0;
  for (const auto& c : cells) {
    if (c.stabilizer_order < 1) throw Error(Errc::invalid_argument, "stabilizer order must be >= 1");
    Rational term(Integer(1), c.stabilizer_order);
    term.canonicalize();
    total += c.dim % 2 == 0 ? term : Rational(-term);
  }
  return total;
}

Rational akita_chi(std::span<const std::vector<OrbifoldCell>> per_element) {
  Rational total = 0;
  for (const auto& cells : per_element) total += orbifold_euler(cells);
  return total;
}

CrystalChi crystal_chi(std::span<const CentralIsometryClass> classes) {
  CrystalChi out;
  out.chi = 0;
  for (const auto& c : classes) {
    if (c.centralizer_order < 1) {
      throw Error(Errc::invalid_argument, "centralizer order of '" + c.label + "' must be >= 1");
    }
    Rational term(Integer(1), c.centralizer_order);
    term.canonicalize();
    out.chi += term;
  }
  out.cls = ClassPoly::constant(out.chi);
  if (out.chi.get_den() != 1) {
    out.warning = "Euler characteristic " + out.chi.get_str() +
                  " is not an integer; the input cannot come from a crystallographic group";
  }
  return out;
}

Rational determinant(std::vector<Rational> m, std::size_t dim) {
  if (m.size() != dim * dim) throw Error(Errc::dimension_mismatch, "matrix is not square");
  Rational det = 1;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && m[pivot * dim + col] == 0) ++pivot;
    if (pivot == dim) return 0;
    if (pivot != col) {
      for (std::size_t k = 0; k < dim; ++k) std::swap(m[pivot * dim + k], m[col * dim + k]);
      det = -det;
    }
    const Rational p = m[col * dim + col];
    det *= p;
    for (std::size_t row = col + 1; row < dim; ++row) {
      Rational factor = m[row * dim + col] / p;
      if (factor == 0) continue;
      for (std::size_t k = col; k < dim; ++k) m[row * dim + k] -= factor * m[col * dim + k];
    }
  }
  return det;
}

bool has_unique_fixed_point(const AffineMap& f) {
  if (f.linear.size() != f.dim * f.dim || f.translation.size() != f.dim) {
    throw Error(Errc::dimension_mismatch, "affine map of dimension " + std::to_string(f.dim) +
                                              " needs a square linear part and a matching translation");
  }
  std::vector<Rational> shifted = f.linear;
  for (std::size_t i = 0; i < f.dim; ++i) shifted[i * f.dim + i] -= 1;
  return determinant(std::move(shifted), f.dim) != 0;
}

}  // namespace kzero
