#pragma once

// Integer counting kernels behind the class formulas. Every kernel has a
// straightforward serial reference and an OpenMP version; both return
// identical results and the tests compare them directly.

#include <cstdint>
#include <vector>

#include "kzero/permgrp.hpp"
#include "kzero/simplicial.hpp"

namespace kzero::kernels {

using Histogram = std::vector<std::uint64_t>;

namespace serial {

/// f-vector indexed by vertex count: result[k] = number of faces with k vertices, size n + 1.
Histogram face_size_histogram(const SimplicialComplex& k);

/// result[c] = number of group elements with c cycles, size degree + 1.
Histogram cycle_count_histogram(const PermGroup& g);

/// result[j] = number of left cosets tG in S_n fixed by sigmas[j].
Histogram fixed_coset_counts(const PermGroup& g, const std::vector<Permutation>& sigmas);

}  // namespace serial

namespace parallel {

/// Falls back to the serial kernel for more than 64 vertices.
Histogram face_size_histogram(const SimplicialComplex& k);
Histogram cycle_count_histogram(const PermGroup& g);
/// Falls back to the serial kernel for degree above 16.
Histogram fixed_coset_counts(const PermGroup& g, const std::vector<Permutation>& sigmas);

}  // namespace parallel

}  // namespace kzero::kernels
