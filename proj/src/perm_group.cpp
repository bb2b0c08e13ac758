#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "kzero/errors.hpp"
#include "kzero/kernels.hpp"
#include "kzero/permgrp.hpp"

namespace kzero {

namespace {

void build_index(std::vector<Permutation>& elements,
                 std::unordered_map<Permutation, std::size_t, PermutationHash>& index) {
  std::sort(elements.begin(), elements.end());
  index.clear();
  index.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
}

}  // namespace

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PermGroup close_group(unsigned n, const std::vector<Permutation>& gens, std::size_t cap) {
  for (const auto& g : gens) {
    if (g.degree() != n) {
      throw Error(Errc::invalid_argument, "generator " + to_string(g) + " does not have degree " + std::to_string(n));
    }
  }
  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  Permutation id = Permutation::identity(n);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation current = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation next = g * current;
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw Error(Errc::order_cap_exceeded, "group order exceeds cap " + std::to_string(cap));
        }
        queue.push_back(std::move(next));
      }
    }
  }
  PermGroup group;
  group.n_ = n;
  for (const auto& g : gens) {
    if (!g.is_identity() && std::find(group.generators_.begin(), group.generators_.end(), g) == group.generators_.end()) {
      group.generators_.push_back(g);
    }
  }
  group.elements_.assign(seen.begin(), seen.end());
  build_index(group.elements_, group.index_);
  return group;
}

PermGroup subgroup_from_elements(unsigned n, std::vector<Permutation> elements) {
  PermGroup group;
  group.n_ = n;
  group.elements_ = std::move(elements);
  build_index(group.elements_, group.index_);

  // Greedy generating set: add any element outside the span so far.
  std::unordered_set<Permutation, PermutationHash> span{Permutation::identity(n)};
  for (const auto& candidate : group.elements_) {
    if (span.count(candidate)) continue;
    group.generators_.push_back(candidate);
    PermGroup closed = close_group(n, group.generators_);
    span = {closed.elements().begin(), closed.elements().end()};
  }
  return group;
}

PermGroup symmetric_group(unsigned n) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(Permutation::from_cycles("(1 2)", n));
    std::string cycle = "(";
    for (unsigned i = 1; i <= n; ++i) cycle += (i > 1 ? " " : "") + std::to_string(i);
    gens.push_back(Permutation::from_cycles(cycle + ")", n));
  }
  return close_group(n, gens);
}

PermGroup cyclic_group(unsigned n) {
  std::vector<unsigned> images(n);
  for (unsigned i = 0; i < n; ++i) images[i] = (i + 1) % n + 1;
  return close_group(n, {Permutation(std::move(images))});
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g) {
  std::vector<bool> assigned(g.order(), false);
  std::vector<ConjugacyClass> classes;
  std::vector<Permutation> gen_inverses;
  for (const auto& s : g.generators()) gen_inverses.push_back(s.inverse());

  for (std::size_t i = 0; i < g.order(); ++i) {
    if (assigned[i]) continue;
    // Orbit of elements()[i] under conjugation by the generators.
    std::size_t size = 0;
    std::vector<std::size_t> stack{i};
    assigned[i] = true;
    while (!stack.empty()) {
      std::size_t cur = stack.back();
      stack.pop_back();
      ++size;
      for (std::size_t s = 0; s < g.generators().size(); ++s) {
        Permutation conj = g.generators()[s] * g.elements()[cur] * gen_inverses[s];
        std::size_t idx = *g.index_of(conj);
        if (!assigned[idx]) {
          assigned[idx] = true;
          stack.push_back(idx);
        }
      }
    }
    classes.push_back({g.elements()[i], size});
  }
  return classes;
}

PermGroup centralizer(const PermGroup& g, const Permutation& element) {
  std::vector<Permutation> commuting;
  for (const auto& h : g.elements()) {
    if (h * element == element * h) commuting.push_back(h);
  }
  return subgroup_from_elements(g.degree(), std::move(commuting));
}

Integer coset_chi(const PermGroup& g, const Permutation& sigma, unsigned cap) {
  if (g.degree() > cap) {
    throw Error(Errc::degree_too_large,
                "coset enumeration needs degree <= " + std::to_string(cap) + ", got " + std::to_string(g.degree()));
  }
  if (sigma.degree() != g.degree()) throw Error(Errc::dimension_mismatch, "permutation degree differs from group degree");
  auto counts = kernels::parallel::fixed_coset_counts(g, {sigma});
  return Integer(static_cast<unsigned long>(counts[0]));
}

PermGroup parse_group(std::string_view text, std::size_t cap) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  std::optional<unsigned> degree;
  std::vector<std::string> cycle_texts;
  auto fail = [&](const std::string& msg) {
    return Error(Errc::parse_error, "group line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    if (keyword == "degree") {
      long long d = -1;
      if (!(fields >> d) || d < 0 || d > 64) throw fail("degree must be an integer in 0..64");
      degree = static_cast<unsigned>(d);
    } else if (keyword == "generator") {
      std::string rest;
      std::getline(fields, rest);
      auto paren = rest.find('(');
      if (paren == std::string::npos) throw fail("generator needs cycle notation");
      cycle_texts.push_back(rest.substr(paren));
    } else {
      throw fail("unknown keyword '" + keyword + "'");
    }
  }
  if (!degree) throw Error(Errc::parse_error, "group file lacks a 'degree' line");
  std::vector<Permutation> gens;
  for (const auto& c : cycle_texts) gens.push_back(Permutation::from_cycles(c, *degree));
  return close_group(*degree, gens, cap);
}

PermGroup read_group_file(const std::string& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot read group file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group(buf.str(), cap);
}

}  // namespace kzero
