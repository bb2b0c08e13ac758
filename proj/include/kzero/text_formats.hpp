#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kzero/quotients.hpp"

namespace kzero {

/// Stratified space file. Lines (`#` starts a comment):
///   degree <n>
///   stratum <label> class=<poly>
///   generator <name> <cycles on 1..n>
///   action <name> <cycles on stratum labels>
/// Generators without an action line act trivially on the strata.
StratifiedGSpace parse_space(std::string_view text, std::size_t cap = default_group_cap);
StratifiedGSpace read_space_file(const std::string& path, std::size_t cap = default_group_cap);

/// Descriptor file, one stratum per line: `<element> <label> class=<poly> c=<int>`.
/// Entries are grouped by element in order of first appearance.
ActionDescriptor parse_descriptor(std::string_view text);
ActionDescriptor read_descriptor_file(const std::string& path);

struct OrbifoldCells {
  std::string element;
  std::vector<OrbifoldCell> cells;
};

/// Orbifold cell file, one cell per line: `<element> dim=<d> stab=<k>`, grouped by element.
std::vector<OrbifoldCells> parse_orbifold_cells(std::string_view text);
std::vector<OrbifoldCells> read_orbifold_cells_file(const std::string& path);

/// Central isometry classes, one per line: `<label> centralizer=<k>`.
std::vector<CentralIsometryClass> parse_crystal(std::string_view text);
std::vector<CentralIsometryClass> read_crystal_file(const std::string& path);

/// Affine map file: `dim <n>`, then n lines `row <a_1> ... <a_n>`, then
/// `translation <b_1> ... <b_n>`. Entries are rationals such as `-1` or `1/2`.
AffineMap parse_affine_map(std::string_view text);
AffineMap read_affine_map_file(const std::string& path);

/// Whole file as a string; throws Errc::parse_error when it cannot be read.
std::string read_text_file(const std::string& path, std::string_view what);

}  // namespace kzero
