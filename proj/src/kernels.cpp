#include "kzero/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

namespace kzero::kernels {

namespace serial {

Histogram face_size_histogram(const SimplicialComplex& k) {
  Histogram hist(k.n() + 1, 0);
  for (const auto& face : k.all_faces()) ++hist[face.size()];
  return hist;
}

Histogram cycle_count_histogram(const PermGroup& g) {
  Histogram hist(g.degree() + 1, 0);
  for (const auto& p : g.elements()) ++hist[p.num_cycles()];
  return hist;
}

Histogram fixed_coset_counts(const PermGroup& g, const std::vector<Permutation>& sigmas) {
  Histogram hits(sigmas.size(), 0);
  std::vector<unsigned> images(g.degree());
  std::iota(images.begin(), images.end(), 1u);
  do {
    Permutation t(images);
    Permutation t_inv = t.inverse();
    for (std::size_t j = 0; j < sigmas.size(); ++j) {
      if (g.contains(t_inv * sigmas[j] * t)) ++hits[j];
    }
  } while (std::next_permutation(images.begin(), images.end()));
  // Each coset tG is reached through its |G| representatives.
  for (auto& h : hits) h /= g.order();
  return hits;
}

}  // namespace serial

namespace parallel {

namespace {

std::uint64_t vertex_mask(const Simplex& s) {
  std::uint64_t m = 0;
  for (Vertex v : s.vertices()) m |= std::uint64_t{1} << (v - 1);
  return m;
}

// Images packed 4 bits per point; valid for degree <= 16.
std::uint64_t pack(const unsigned* images, unsigned n) {
  std::uint64_t key = 0;
  for (unsigned i = 0; i < n; ++i) key |= std::uint64_t{images[i] - 1} << (4 * i);
  return key;
}

// Writes the r-th permutation of {1..n} (Lehmer order) into out.
void unrank(std::uint64_t r, unsigned n, const std::vector<std::uint64_t>& factorials, unsigned* out) {
  unsigned pool[16];
  for (unsigned i = 0; i < n; ++i) pool[i] = i + 1;
  unsigned left = n;
  for (unsigned i = 0; i < n; ++i) {
    std::uint64_t f = factorials[n - 1 - i];
    auto pick = static_cast<unsigned>(r / f);
    r %= f;
    out[i] = pool[pick];
    std::copy(pool + pick + 1, pool + left, pool + pick);
    --left;
  }
}

}  // namespace

Histogram face_size_histogram(const SimplicialComplex& k) {
  if (k.n() > 64) return serial::face_size_histogram(k);
  const auto& facets = k.facets();
  std::vector<std::uint64_t> masks(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i) masks[i] = vertex_mask(facets[i]);

  const unsigned width = k.n() + 1;
  Histogram hist(width, 0);
  std::uint64_t* h = hist.data();
  const auto count = static_cast<long>(masks.size());
  // A face is counted by the first facet that contains it.
#pragma omp parallel for schedule(dynamic) reduction(+ : h[:width])
  for (long i = 0; i < count; ++i) {
    const std::uint64_t facet = masks[static_cast<std::size_t>(i)];
    std::uint64_t sub = facet;
    for (;;) {
      bool owned = true;
      for (long j = 0; j < i && owned; ++j) owned = (sub & ~masks[static_cast<std::size_t>(j)]) != 0;
      if (owned) ++h[__builtin_popcountll(sub)];
      if (sub == 0) break;
      sub = (sub - 1) & facet;
    }
  }
  return hist;
}

Histogram cycle_count_histogram(const PermGroup& g) {
  const unsigned width = g.degree() + 1;
  Histogram hist(width, 0);
  std::uint64_t* h = hist.data();
  const auto& elements = g.elements();
  const auto count = static_cast<long>(elements.size());
#pragma omp parallel for reduction(+ : h[:width])
  for (long i = 0; i < count; ++i) ++h[elements[static_cast<std::size_t>(i)].num_cycles()];
  return hist;
}

Histogram fixed_coset_counts(const PermGroup& g, const std::vector<Permutation>& sigmas) {
  const unsigned n = g.degree();
  if (n > 16) return serial::fixed_coset_counts(g, sigmas);

  std::vector<std::uint64_t> keys;
  keys.reserve(g.order());
  for (const auto& p : g.elements()) keys.push_back(pack(p.images().data(), n));
  std::sort(keys.begin(), keys.end());

  std::vector<std::uint64_t> factorials(n + 1, 1);
  for (unsigned i = 1; i <= n; ++i) factorials[i] = factorials[i - 1] * i;
  const auto total = static_cast<long long>(factorials[n]);

  const auto width = static_cast<unsigned>(sigmas.size());
  Histogram hits(width, 0);
  std::uint64_t* h = hits.data();
#pragma omp parallel
  {
    unsigned t[16];
    unsigned t_inv[16];
    unsigned conj[16];
#pragma omp for reduction(+ : h[:width])
    for (long long r = 0; r < total; ++r) {
      unrank(static_cast<std::uint64_t>(r), n, factorials, t);
      for (unsigned i = 0; i < n; ++i) t_inv[t[i] - 1] = i + 1;
      for (unsigned j = 0; j < width; ++j) {
        const auto& sigma = sigmas[j].images();
        // (t^-1 sigma t)(i) = t^-1(sigma(t(i)))
        for (unsigned i = 0; i < n; ++i) conj[i] = t_inv[sigma[t[i] - 1] - 1];
        if (std::binary_search(keys.begin(), keys.end(), pack(conj, n))) ++h[j];
      }
    }
  }
  for (auto& c : hits) c /= g.order();
  return hits;
}

}  // namespace parallel

}  // namespace kzero::kernels
