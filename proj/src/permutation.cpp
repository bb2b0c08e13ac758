#include <algorithm>
#include <cctype>
#include <numeric>

#include "kzero/errors.hpp"
#include "kzero/permgrp.hpp"

namespace kzero {

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (unsigned v : images_) {
    if (v < 1 || v > images_.size() || seen[v]) {
      throw Error(Errc::invalid_argument, "image list is not a permutation of 1.." + std::to_string(images_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(unsigned n) {
  std::vector<unsigned> id(n);
  std::iota(id.begin(), id.end(), 1u);
  return Permutation(std::move(id));
}

Permutation Permutation::from_cycles(std::string_view text, unsigned n) {
  auto fail = [&](const std::string& msg) -> Error {
    return Error(Errc::parse_error, "cycle notation '" + std::string(text) + "': " + msg);
  };
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 1u);
  std::vector<bool> used(n + 1, false);

  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
  };
  skip();
  if (pos == text.size()) throw fail("empty");
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<unsigned> cycle;
    for (;;) {
      skip();
      if (pos == text.size()) throw fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw fail(std::string("unexpected '") + text[pos] + "'");
      if (pos - start > 9) throw fail("point out of range");
      unsigned v = static_cast<unsigned>(std::stoul(std::string(text.substr(start, pos - start))));
      if (v < 1 || v > n) throw fail("point " + std::to_string(v) + " outside 1.." + std::to_string(n));
      if (used[v]) throw fail("point " + std::to_string(v) + " repeated");
      used[v] = true;
      cycle.push_back(v);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    skip();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (images_[i] != i + 1) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = i + 1;
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

unsigned Permutation::num_cycles() const {
  std::vector<bool> seen(images_.size(), false);
  unsigned cycles = 0;
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (unsigned j = i; !seen[j]; j = images_[j] - 1) seen[j] = true;
  }
  return cycles;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw Error(Errc::dimension_mismatch, "composing permutations of different degree");
  Permutation out;
  out.images_.resize(q.images_.size());
  for (std::size_t i = 0; i < q.images_.size(); ++i) out.images_[i] = p.images_[q.images_[i] - 1];
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (unsigned v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree() + 1, false);
  for (unsigned i = 1; i <= p.degree(); ++i) {
    if (seen[i] || p(i) == i) continue;
    out += "(";
    for (unsigned j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      if (j != i) out += " ";
      out += std::to_string(j);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

unsigned Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0u); }

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.parts[i]);
  }
  return out + ")";
}

Partition cycle_type(const Permutation& p) {
  Partition lambda;
  std::vector<bool> seen(p.degree() + 1, false);
  for (unsigned i = 1; i <= p.degree(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (unsigned j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      ++len;
    }
    lambda.parts.push_back(len);
  }
  std::sort(lambda.parts.rbegin(), lambda.parts.rend());
  return lambda;
}

Permutation permutation_of_type(const Partition& lambda) {
  std::vector<unsigned> images(lambda.n());
  unsigned start = 0;
  for (unsigned len : lambda.parts) {
    for (unsigned i = 0; i < len; ++i) images[start + i] = start + (i + 1) % len + 1;
    start += len;
  }
  return Permutation(std::move(images));
}

namespace {

void partitions_into(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back({prefix});
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<PartitionCount> partitions_with_counts(unsigned n, unsigned cap) {
  if (n < 1) throw Error(Errc::invalid_argument, "partitions need n >= 1");
  if (n > cap) {
    throw Error(Errc::degree_too_large, "degree " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  }
  std::vector<Partition> parts;
  std::vector<unsigned> prefix;
  partitions_into(n, n, prefix, parts);

  Integer n_factorial;
  mpz_fac_ui(n_factorial.get_mpz_t(), n);
  std::vector<PartitionCount> out;
  out.reserve(parts.size());
  for (auto& lambda : parts) {
    // h = n! / (prod of parts * prod over distinct parts of multiplicity!)
    Integer denom = 1;
    std::size_t i = 0;
    while (i < lambda.parts.size()) {
      std::size_t j = i;
      while (j < lambda.parts.size() && lambda.parts[j] == lambda.parts[i]) ++j;
      Integer mult_fact;
      mpz_fac_ui(mult_fact.get_mpz_t(), j - i);
      Integer power;
      mpz_ui_pow_ui(power.get_mpz_t(), lambda.parts[i], j - i);
      denom *= power * mult_fact;
      i = j;
    }
    out.push_back({std::move(lambda), Integer(n_factorial / denom)});
  }
  return out;
}

}  // namespace kzero
