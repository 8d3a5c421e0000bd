#pragma once

#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

namespace echg {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex labels.
using VertexSet = std::vector<Vertex>;

/// Exact binomial coefficient. Throws std::overflow_error when C(n,k) does not
/// fit in 64 bits. Returns 0 for k > n.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Binomial clamped to UINT64_MAX instead of throwing.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

/// Advances `combo` (strictly increasing indices drawn from [0, n)) to the
/// lexicographically next combination of the same size. Returns false and
/// leaves `combo` unspecified once the last combination has been passed.
bool next_combination(std::span<std::uint32_t> combo, std::uint32_t n);

/// First combination of size k in lexicographic order: {0, 1, ..., k-1}.
std::vector<std::uint32_t> first_combination(std::uint32_t k);

/// The combination at position `rank` of the lexicographic order of
/// k-subsets of [0, n).
std::vector<std::uint32_t> unrank_lex(std::uint64_t rank, std::uint32_t n, std::uint32_t k);

/// Colexicographic rank of a strictly increasing combination:
/// sum over i of C(combo[i], i + 1). Dense in [0, C(n, k)).
std::uint64_t rank_colex(std::span<const std::uint32_t> combo);

/// Calls `fn(std::span<const uint32_t>)` for every k-subset of [0, n) in
/// lexicographic order. `fn` may return bool; returning false stops early.
template <typename Fn>
void for_each_combination(std::uint32_t n, std::uint32_t k, Fn&& fn) {
  if (k > n) return;
  auto combo = first_combination(k);
  do {
    if constexpr (std::is_same_v<decltype(fn(std::span<const std::uint32_t>(combo))), bool>) {
      if (!fn(std::span<const std::uint32_t>(combo))) return;
    } else {
      fn(std::span<const std::uint32_t>(combo));
    }
  } while (next_combination(combo, n));
}

/// True iff `values` is strictly increasing.
bool is_strictly_increasing(std::span<const std::uint32_t> values);

}  // namespace echg
