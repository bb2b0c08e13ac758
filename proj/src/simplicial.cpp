#include "kzero/simplicial.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "kzero/errors.hpp"

namespace kzero {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool Simplex::contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool Simplex::is_subset_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

Simplex Simplex::intersect(const Simplex& other) const {
  Simplex out;
  std::set_intersection(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
                        std::back_inserter(out.vertices_));
  return out;
}

std::strong_ordering operator<=>(const Simplex& lhs, const Simplex& rhs) {
  if (auto c = lhs.size() <=> rhs.size(); c != 0) return c;
  return lhs.vertices_ <=> rhs.vertices_;
}

std::string to_string(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.vertices()[i]);
  }
  return out + "]";
}

SimplicialComplex SimplicialComplex::from_facets(unsigned n, const std::vector<Simplex>& faces) {
  for (const auto& f : faces) {
    for (Vertex v : f.vertices()) {
      if (v < 1 || v > n) {
        throw Error(Errc::vertex_out_of_range,
                    "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
      }
    }
  }
  std::vector<Simplex> sorted(faces);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  SimplicialComplex k;
  k.n_ = n;
  // A face is maximal when no strictly larger face contains it; larger faces sort later.
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    bool maximal = std::none_of(sorted.begin() + static_cast<std::ptrdiff_t>(i) + 1, sorted.end(),
                                [&](const Simplex& bigger) { return sorted[i].is_subset_of(bigger); });
    if (maximal) k.facets_.push_back(sorted[i]);
  }
  return k;
}

SimplicialComplex SimplicialComplex::full_simplex(unsigned n) {
  std::vector<Vertex> all(n);
  for (unsigned i = 0; i < n; ++i) all[i] = i + 1;
  return from_facets(n, {Simplex(all)});
}

SimplicialComplex SimplicialComplex::discrete(unsigned n) {
  std::vector<Simplex> points;
  for (Vertex v = 1; v <= n; ++v) points.push_back(Simplex{v});
  return from_facets(n, points);
}

int SimplicialComplex::dim() const {
  if (facets_.empty()) throw Error(Errc::empty_complex, "the empty complex has no dimension");
  return facets_.back().dim();
}

bool SimplicialComplex::contains(const Simplex& s) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return s.is_subset_of(f); });
}

std::vector<Simplex> SimplicialComplex::all_faces() const {
  std::set<Simplex> faces;
  for (const auto& f : facets_) {
    const auto& v = f.vertices();
    const std::size_t k = v.size();
    // Facets here are small; subsets are enumerated by bitmask.
    for (unsigned long long mask = 0; mask < (1ull << k); ++mask) {
      std::vector<Vertex> sub;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (1ull << i)) sub.push_back(v[i]);
      }
      faces.insert(Simplex(std::move(sub)));
    }
  }
  return {faces.begin(), faces.end()};
}

SimplicialComplex SimplicialComplex::skeleton(int d) const {
  if (d < -1) throw Error(Errc::invalid_argument, "skeleton dimension must be at least -1");
  std::vector<Simplex> kept;
  for (const auto& face : all_faces()) {
    if (face.dim() <= d) kept.push_back(face);
  }
  return from_facets(n_, kept);
}

DisjointUnion disjoint_union(const std::vector<SimplicialComplex>& parts) {
  if (parts.empty()) throw Error(Errc::invalid_argument, "disjoint union of an empty list");
  DisjointUnion out;
  std::vector<Simplex> facets;
  unsigned offset = 0;
  for (const auto& part : parts) {
    std::vector<Vertex> ids;
    for (Vertex v = 1; v <= part.n(); ++v) ids.push_back(offset + v);
    out.component_vertices.push_back(std::move(ids));
    for (const auto& f : part.facets()) {
      std::vector<Vertex> shifted;
      for (Vertex v : f.vertices()) shifted.push_back(v + offset);
      facets.emplace_back(std::move(shifted));
    }
    offset += part.n();
  }
  out.complex = SimplicialComplex::from_facets(offset, facets);
  return out;
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void complex_parse_fail(std::size_t line, const std::string& msg) {
  throw Error(Errc::parse_error, "complex line " + std::to_string(line) + ": " + msg);
}

unsigned parse_unsigned(const std::string& token, std::size_t line) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9) {
    complex_parse_fail(line, "expected a non-negative integer, got '" + token + "'");
  }
  return static_cast<unsigned>(std::stoul(token));
}

}  // namespace

SimplicialComplex parse_complex(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool have_n = false;
  unsigned n = 0;
  std::vector<Simplex> faces;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (!have_n) {
      if (line.rfind("n=", 0) != 0) complex_parse_fail(line_no, "first line must be n=<int>");
      n = parse_unsigned(trim(line.substr(2)), line_no);
      have_n = true;
      continue;
    }
    if (line == "{}") {
      faces.emplace_back();
      continue;
    }
    std::vector<Vertex> vs;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) vs.push_back(parse_unsigned(trim(field), line_no));
    faces.emplace_back(std::move(vs));
  }
  if (!have_n) complex_parse_fail(line_no, "missing n=<int> header");
  return SimplicialComplex::from_facets(n, faces);
}

SimplicialComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot read complex file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

std::string format_complex(const SimplicialComplex& k) {
  std::string out = "n=" + std::to_string(k.n()) + "\n";
  for (const auto& f : k.facets()) {
    if (f.empty()) {
      out += "{}\n";
      continue;
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(f.vertices()[i]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace kzero
