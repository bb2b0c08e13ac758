#pragma once

#include <map>
#include <string>
#include <vector>

#include "kzero/class_poly.hpp"
#include "kzero/class_series.hpp"

namespace kzero {

/// Multi-degree (d_1, ..., d_m) of a 0-cycle.
using DegreeVector = std::vector<unsigned>;

unsigned total_degree(const DegreeVector& d);

/// [SP^{d}(X)] = prod_i [SP^{d_i}(X)].
ClassPoly sp_vector_class(const DegreeVector& d, const ClassPoly& p);

/// Classes [Z_n^{d}(X)] for every d with m entries and |d| <= max_total.
struct ZTable {
  unsigned m = 0;
  unsigned n = 0;
  ClassPoly x_class;
  unsigned max_total = 0;
  std::map<DegreeVector, ClassPoly> values;

  const ClassPoly& at(const DegreeVector& d) const;
};

/// Solves sum_{k>=0} [SP^k][Z_n^{d-kn}] = [SP^{d}] for [Z_n^{d}], by increasing |d|.
/// Throws Errc::invalid_argument unless m, n >= 1.
ZTable z_table(unsigned m, unsigned n, const ClassPoly& p, unsigned max_total);

/// (1 - x^{mn})^p (1 - x)^{-mp}.
ClassSeries z_series_closed(unsigned m, unsigned n, const ClassPoly& p, unsigned order);

/// Coefficient of x^D is sum_{|d| = D} [Z_n^{d}]. Throws Errc::order_exceeds_table when order > t.max_total.
ClassSeries z_series_from_table(const ZTable& t, unsigned order);

/// z_series_closed divided by macdonald_series^m.
ClassSeries fww_ratio(unsigned m, unsigned n, const ClassPoly& p, unsigned order);

/// One `(d_1,...,d_m) -> poly` line per entry, ordered by |d| then lexicographically.
std::string format_table(const ZTable& t, bool latex = false);

}  // namespace kzero
