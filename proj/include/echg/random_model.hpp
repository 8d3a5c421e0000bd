#pragma once

#include <cstdint>
#include <vector>

#include "echg/hypergraph.hpp"

namespace echg {

/*
 * H_h(m, p): every h-subset of [0, m) is an edge independently with
 * probability p.
 *
 * Sampling is pinned to std::mt19937_64 seeded with `seed`. The h-subsets are
 * visited in lexicographic order; each consumes one 64-bit draw x and becomes
 * an edge iff (x >> 11) * 2^-53 < p. Trial i of an experiment uses
 * trial_seed(seed, i). Changing any of this changes every sample.
 */
struct RandomModel {
  RandomModel(std::uint32_t h, std::uint32_t m, double p, std::uint64_t seed);

  std::uint32_t h;
  std::uint32_t m;
  double p;
  std::uint64_t seed;
};

Hypergraph sample(const RandomModel& model);

/// splitmix64(base + 0x9E3779B97F4A7C15 * (trial + 1)).
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial);

/// The union bound C(m,n) 2^n (1 - p^n)^C(m-n, h-1) on the probability that
/// H_h(m, p) is NOT n-e.c., evaluated in the log domain.
struct UnionBound {
  double log10_value = 0.0;  // exact enough to compare far below DBL_MIN
  double value = 0.0;        // 10^log10_value; underflows to 0 when tiny
};

/// Requires n >= 1, h >= 2, m > n, 0 < p < 1.
UnionBound union_bound(std::uint32_t n, std::uint32_t h, std::uint32_t m, double p);

struct EcFraction {
  double fraction = 0.0;
  std::vector<bool> verdicts;  // per trial, in trial order
  std::vector<std::size_t> edge_counts;
};

/// Samples `trials` hypergraphs with per-trial seeds and checks n-e.c. on
/// each. Trials run on up to `threads` workers; output is identical for any
/// thread count.
EcFraction estimate_ec_fraction(const RandomModel& model, std::uint32_t n, std::uint32_t trials,
                                unsigned threads = 1);

}  // namespace echg
