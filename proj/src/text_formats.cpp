#include "kzero/text_formats.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "kzero/errors.hpp"

namespace kzero {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string line = raw.substr(0, raw.find('#'));
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back({number, line});
  }
  return out;
}

Error line_error(std::string_view what, std::size_t number, const std::string& msg) {
  return Error(Errc::parse_error, std::string(what) + " line " + std::to_string(number) + ": " + msg);
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<Integer> parse_integer(std::string_view s) {
  std::string t = trim(s);
  std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (t.size() == start) return std::nullopt;
  if (!std::all_of(t.begin() + static_cast<long>(start), t.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return std::nullopt;
  }
  if (t[0] == '+') t.erase(0, 1);
  return Integer(t);
}

Rational parse_rational(std::string_view s) {
  ClassPoly p = parse_class_poly(s);
  if (!p.is_constant()) throw Error(Errc::parse_error, "expected a rational number, got '" + std::string(s) + "'");
  return *p.constant_value();
}

// Value of `key=...` up to the next whitespace.
std::optional<std::string> keyed_token(const std::string& line, std::string_view key) {
  std::istringstream in(line);
  std::string tok;
  std::string prefix = std::string(key) + "=";
  while (in >> tok) {
    if (tok.rfind(prefix, 0) == 0) return tok.substr(prefix.size());
  }
  return std::nullopt;
}

// Cycles written over arbitrary labels, e.g. `(v3 v4)(a1 a2)`.
Permutation label_cycles(std::string_view text, const std::map<std::string, unsigned, std::less<>>& index,
                         unsigned count) {
  std::vector<unsigned> images(count);
  for (unsigned i = 0; i < count; ++i) images[i] = i + 1;
  std::vector<bool> seen(count, false);
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != '(') throw Error(Errc::parse_error, "expected '(' in label cycles");
    auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw Error(Errc::parse_error, "unclosed '(' in label cycles");
    std::string inner(text.substr(pos + 1, close - pos - 1));
    std::replace(inner.begin(), inner.end(), ',', ' ');
    std::istringstream in(inner);
    std::vector<unsigned> cycle;
    std::string label;
    while (in >> label) {
      auto it = index.find(label);
      if (it == index.end()) throw Error(Errc::parse_error, "unknown stratum label '" + label + "'");
      if (seen[it->second - 1]) throw Error(Errc::parse_error, "stratum '" + label + "' appears twice");
      seen[it->second - 1] = true;
      cycle.push_back(it->second);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    pos = close + 1;
  }
  return Permutation(std::move(images));
}

}  // namespace

std::string read_text_file(const std::string& path, std::string_view what) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot read " + std::string(what) + " file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

StratifiedGSpace parse_space(std::string_view text, std::size_t cap) {
  std::optional<unsigned> degree;
  std::vector<Stratum> strata;
  std::map<std::string, unsigned, std::less<>> label_index;
  std::vector<std::pair<std::string, std::string>> generators;
  std::vector<std::pair<std::string, std::string>> actions;

  for (const auto& [number, line] : content_lines(text)) {
    std::istringstream fields(line);
    std::string keyword;
    fields >> keyword;
    std::string rest;
    std::getline(fields, rest);
    if (keyword == "degree") {
      auto d = parse_integer(rest);
      if (!d || *d < 0 || *d > 64) throw line_error("space", number, "degree must be an integer in 0..64");
      degree = static_cast<unsigned>(d->get_ui());
    } else if (keyword == "stratum") {
      std::istringstream r(rest);
      std::string label;
      r >> label;
      auto eq = rest.find("class=");
      if (label.empty() || label.find('=') != std::string::npos || eq == std::string::npos) {
        throw line_error("space", number, "expected 'stratum <label> class=<poly>'");
      }
      if (label_index.count(label)) throw line_error("space", number, "duplicate stratum '" + label + "'");
      label_index.emplace(label, static_cast<unsigned>(strata.size() + 1));
      strata.push_back({label, parse_class_poly(rest.substr(eq + 6))});
    } else if (keyword == "generator" || keyword == "action") {
      std::istringstream r(rest);
      std::string name;
      r >> name;
      std::string cycles;
      std::getline(r, cycles);
      if (name.empty() || trim(cycles).empty() || name.find('(') != std::string::npos) {
        throw line_error("space", number, "expected '" + keyword + " <name> <cycles>'");
      }
      (keyword == "generator" ? generators : actions).emplace_back(name, trim(cycles));
    } else {
      throw line_error("space", number, "unknown keyword '" + keyword + "'");
    }
  }
  if (!degree) throw Error(Errc::parse_error, "space file lacks a 'degree' line");
  if (strata.empty()) throw Error(Errc::parse_error, "space file has no strata");

  const auto count = static_cast<unsigned>(strata.size());
  std::vector<GeneratorAction> gens;
  for (const auto& [name, cycles] : generators) {
    Permutation on_strata = Permutation::identity(count);
    bool found = false;
    for (const auto& [aname, acycles] : actions) {
      if (aname != name) continue;
      if (found) throw Error(Errc::parse_error, "generator '" + name + "' has two action lines");
      on_strata = label_cycles(acycles, label_index, count);
      found = true;
    }
    gens.push_back({Permutation::from_cycles(cycles, *degree), on_strata});
  }
  for (const auto& [aname, acycles] : actions) {
    bool known = std::any_of(generators.begin(), generators.end(), [&](const auto& g) { return g.first == aname; });
    if (!known) throw Error(Errc::parse_error, "action for unknown generator '" + aname + "'");
  }
  return StratifiedGSpace::create(std::move(strata), *degree, gens, cap);
}

StratifiedGSpace read_space_file(const std::string& path, std::size_t cap) {
  return parse_space(read_text_file(path, "space"), cap);
}

ActionDescriptor parse_descriptor(std::string_view text) {
  ActionDescriptor d;
  for (const auto& [number, line] : content_lines(text)) {
    std::istringstream fields(line);
    std::string element, label;
    fields >> element >> label;
    auto cls_pos = line.find("class=");
    auto c_pos = line.rfind(" c=");
    if (label.empty() || cls_pos == std::string::npos || c_pos == std::string::npos || c_pos < cls_pos) {
      throw line_error("descriptor", number, "expected '<element> <label> class=<poly> c=<int>'");
    }
    ClassPoly cls = parse_class_poly(line.substr(cls_pos + 6, c_pos - cls_pos - 6));
    auto c = parse_integer(line.substr(c_pos + 3));
    if (!c) throw line_error("descriptor", number, "c= needs an integer");
    auto it = std::find_if(d.entries.begin(), d.entries.end(), [&](const auto& e) { return e.element == element; });
    if (it == d.entries.end()) {
      d.entries.push_back({element, {}});
      it = std::prev(d.entries.end());
    }
    it->strata.push_back({label, std::move(cls), *c});
  }
  return d;
}

ActionDescriptor read_descriptor_file(const std::string& path) {
  return parse_descriptor(read_text_file(path, "descriptor"));
}

std::vector<OrbifoldCells> parse_orbifold_cells(std::string_view text) {
  std::vector<OrbifoldCells> out;
  for (const auto& [number, line] : content_lines(text)) {
    std::istringstream fields(line);
    std::string element;
    fields >> element;
    auto dim_text = keyed_token(line, "dim");
    auto stab_text = keyed_token(line, "stab");
    auto dim = dim_text ? parse_integer(*dim_text) : std::nullopt;
    auto stab = stab_text ? parse_integer(*stab_text) : std::nullopt;
    if (element.find('=') != std::string::npos || !dim || !stab || *dim < 0 || !dim->fits_sint_p()) {
      throw line_error("orbifold", number, "expected '<element> dim=<d> stab=<k>'");
    }
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& e) { return e.element == element; });
    if (it == out.end()) {
      out.push_back({element, {}});
      it = std::prev(out.end());
    }
    it->cells.push_back({static_cast<int>(dim->get_si()), *stab});
  }
  return out;
}

std::vector<OrbifoldCells> read_orbifold_cells_file(const std::string& path) {
  return parse_orbifold_cells(read_text_file(path, "orbifold"));
}

std::vector<CentralIsometryClass> parse_crystal(std::string_view text) {
  std::vector<CentralIsometryClass> out;
  for (const auto& [number, line] : content_lines(text)) {
    std::istringstream fields(line);
    std::string label;
    fields >> label;
    auto order_text = keyed_token(line, "centralizer");
    auto order = order_text ? parse_integer(*order_text) : std::nullopt;
    if (label.find('=') != std::string::npos || !order) {
      throw line_error("crystal", number, "expected '<label> centralizer=<k>'");
    }
    out.push_back({label, *order});
  }
  return out;
}

std::vector<CentralIsometryClass> read_crystal_file(const std::string& path) {
  return parse_crystal(read_text_file(path, "crystal"));
}

AffineMap parse_affine_map(std::string_view text) {
  AffineMap f;
  std::optional<std::size_t> dim;
  bool have_translation = false;
  std::size_t rows = 0;
  for (const auto& [number, line] : content_lines(text)) {
    std::istringstream fields(line);
    std::string keyword;
    fields >> keyword;
    std::vector<Rational> values;
    std::string tok;
    try {
      while (fields >> tok) values.push_back(parse_rational(tok));
    } catch (const Error& e) {
      throw line_error("affine map", number, e.what());
    }
    if (keyword == "dim") {
      if (values.size() != 1 || values[0] < 0 || values[0].get_den() != 1) {
        throw line_error("affine map", number, "dim needs a non-negative integer");
      }
      dim = values[0].get_num().get_ui();
    } else if (keyword == "row" || keyword == "translation") {
      if (!dim) throw line_error("affine map", number, "'dim' must come first");
      if (values.size() != *dim) {
        throw Error(Errc::dimension_mismatch, "affine map line " + std::to_string(number) + ": expected " +
                                                  std::to_string(*dim) + " entries, got " +
                                                  std::to_string(values.size()));
      }
      if (keyword == "row") {
        ++rows;
        f.linear.insert(f.linear.end(), values.begin(), values.end());
      } else {
        if (have_translation) throw line_error("affine map", number, "second translation line");
        have_translation = true;
        f.translation = std::move(values);
      }
    } else {
      throw line_error("affine map", number, "unknown keyword '" + keyword + "'");
    }
  }
  if (!dim) throw Error(Errc::parse_error, "affine map file lacks a 'dim' line");
  f.dim = *dim;
  if (rows != f.dim) {
    throw Error(Errc::dimension_mismatch,
                "affine map needs " + std::to_string(f.dim) + " rows, got " + std::to_string(rows));
  }
  if (!have_translation) f.translation.assign(f.dim, Rational(0));
  return f;
}

AffineMap read_affine_map_file(const std::string& path) { return parse_affine_map(read_text_file(path, "affine map")); }

}  // namespace kzero
