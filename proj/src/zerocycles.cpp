#include "kzero/zerocycles.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kzero/errors.hpp"
#include "kzero/permgrp.hpp"

namespace kzero {

namespace {

void require_positive(unsigned m, unsigned n) {
  if (m < 1 || n < 1) throw Error(Errc::invalid_argument, "m and n must be >= 1");
}

// All vectors of length m with entry sum exactly total, in lexicographic order.
std::vector<DegreeVector> vectors_of_total(unsigned m, unsigned total) {
  std::vector<DegreeVector> out;
  DegreeVector d(m, 0);
  auto rec = [&](auto&& self, unsigned pos, unsigned left) -> void {
    if (pos + 1 == m) {
      d[pos] = left;
      out.push_back(d);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      d[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace

unsigned total_degree(const DegreeVector& d) { return std::accumulate(d.begin(), d.end(), 0u); }

ClassPoly sp_vector_class(const DegreeVector& d, const ClassPoly& p) {
  ClassPoly out = ClassPoly::one();
  for (unsigned di : d) out *= symmetric_product_class(p, di);
  return out;
}

const ClassPoly& ZTable::at(const DegreeVector& d) const {
  auto it = values.find(d);
  if (it == values.end()) {
    throw Error(Errc::order_exceeds_table, "degree vector outside the table (max total " + std::to_string(max_total) + ")");
  }
  return it->second;
}

ZTable z_table(unsigned m, unsigned n, const ClassPoly& p, unsigned max_total) {
  require_positive(m, n);
  ZTable t{m, n, p, max_total, {}};
  std::vector<ClassPoly> sp;  // sp[k] = [SP^k(X)]
  for (unsigned k = 0; k <= max_total; ++k) sp.push_back(symmetric_product_class(p, k));

  for (unsigned total = 0; total <= max_total; ++total) {
    for (const auto& d : vectors_of_total(m, total)) {
      ClassPoly value = ClassPoly::one();
      for (unsigned di : d) value *= sp[di];
      unsigned kmax = *std::min_element(d.begin(), d.end()) / n;
      DegreeVector shifted = d;
      for (unsigned k = 1; k <= kmax; ++k) {
        for (auto& e : shifted) e -= n;
        value -= sp[k] * t.values.at(shifted);
      }
      t.values.emplace(d, std::move(value));
    }
  }
  return t;
}

ClassSeries z_series_closed(unsigned m, unsigned n, const ClassPoly& p, unsigned order) {
  require_positive(m, n);
  ClassSeries out = binomial_series(p, m * n, 1, order);
  ClassSeries mac = macdonald_series(p, order);
  for (unsigned i = 0; i < m; ++i) out = out * mac;
  return out;
}

ClassSeries z_series_from_table(const ZTable& t, unsigned order) {
  if (order > t.max_total) {
    throw Error(Errc::order_exceeds_table, "order " + std::to_string(order) + " exceeds table total " +
                                               std::to_string(t.max_total));
  }
  std::vector<ClassPoly> coeffs(order + 1);
  for (const auto& [d, value] : t.values) {
    unsigned total = total_degree(d);
    if (total <= order) coeffs[total] += value;
  }
  return ClassSeries(std::move(coeffs));
}

ClassSeries fww_ratio(unsigned m, unsigned n, const ClassPoly& p, unsigned order) {
  ClassSeries mac_m = series_pow(macdonald_series(p, order), m);
  return z_series_closed(m, n, p, order) * series_inverse(mac_m);
}

std::string format_table(const ZTable& t, bool latex) {
  std::vector<const std::pair<const DegreeVector, ClassPoly>*> rows;
  for (const auto& entry : t.values) rows.push_back(&entry);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto* a, const auto* b) { return total_degree(a->first) < total_degree(b->first); });
  std::ostringstream out;
  for (const auto* row : rows) {
    out << '(';
    for (std::size_t i = 0; i < row->first.size(); ++i) out << (i ? "," : "") << row->first[i];
    out << ") -> " << (latex ? to_latex(row->second) : to_string(row->second)) << '\n';
  }
  return out.str();
}

}  // namespace kzero
