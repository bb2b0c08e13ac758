#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "kzero/kernels.hpp"
#include "kzero/permgrp.hpp"
#include "kzero/simplicial.hpp"

using namespace kzero;

namespace {

double best_ms(const std::function<void()>& f, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const std::string& name, const std::function<kernels::Histogram()>& serial,
         const std::function<kernels::Histogram()>& parallel) {
  kernels::Histogram a, b;
  double ts = best_ms([&] { a = serial(); });
  double tp = best_ms([&] { b = parallel(); });
  std::printf("%-34s %12.2f %12.2f %8.2fx  %s\n", name.c_str(), ts, tp, ts / tp, a == b ? "match" : "MISMATCH");
}

// n vertices, facets {i, i+1, ..., i+w-1} cyclically.
SimplicialComplex cyclic_band(unsigned n, unsigned w) {
  std::vector<Simplex> facets;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Vertex> vs;
    for (unsigned j = 0; j < w; ++j) vs.push_back((i + j) % n + 1);
    facets.emplace_back(vs);
  }
  return SimplicialComplex::from_facets(n, facets);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-34s %12s %12s %9s\n", "kernel", "serial ms", "parallel ms", "speedup");

  for (auto [n, w] : {std::pair{24u, 10u}, std::pair{30u, 14u}, std::pair{40u, 16u}}) {
    auto k = cyclic_band(n, w);
    row("faces band n=" + std::to_string(n) + " w=" + std::to_string(w),
        [&] { return kernels::serial::face_size_histogram(k); },
        [&] { return kernels::parallel::face_size_histogram(k); });
  }

  for (unsigned n : {7u, 8u, 9u}) {
    auto g = symmetric_group(n);
    row("cycles S_" + std::to_string(n), [&] { return kernels::serial::cycle_count_histogram(g); },
        [&] { return kernels::parallel::cycle_count_histogram(g); });
  }

  for (unsigned n : {7u, 8u, 9u}) {
    auto g = cyclic_group(n);
    std::vector<Permutation> reps;
    for (const auto& pc : partitions_with_counts(n, n)) reps.push_back(permutation_of_type(pc.partition));
    row("cosets C_" + std::to_string(n) + " in S_" + std::to_string(n),
        [&] { return kernels::serial::fixed_coset_counts(g, reps); },
        [&] { return kernels::parallel::fixed_coset_counts(g, reps); });
  }
  return 0;
}
