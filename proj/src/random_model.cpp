#include "echg/random_model.hpp"

#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "echg/checker.hpp"

namespace echg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Natural log of C(n, k), summed term by term.
double log_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return -INFINITY;
  k = std::min(k, n - k);
  double acc = 0.0;
  for (std::uint64_t i = 1; i <= k; ++i) acc += std::log(static_cast<double>(n - k + i)) - std::log(static_cast<double>(i));
  return acc;
}

}  // namespace

RandomModel::RandomModel(std::uint32_t h_, std::uint32_t m_, double p_, std::uint64_t seed_)
    : h(h_), m(m_), p(p_), seed(seed_) {
  if (h < 2) throw std::invalid_argument("random model needs h >= 2");
  if (m < h) throw std::invalid_argument("random model needs m >= h");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("random model needs 0 < p < 1");
}

Hypergraph sample(const RandomModel& model) {
  std::mt19937_64 engine(model.seed);
  std::vector<VertexSet> edges;
  for_each_combination(model.m, model.h, [&](std::span<const std::uint32_t> c) {
    const double u = static_cast<double>(engine() >> 11) * 0x1.0p-53;
    if (u < model.p) edges.emplace_back(c.begin(), c.end());
  });
  return Hypergraph(model.h, model.m, edges);
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t trial) {
  return splitmix64(base + 0x9E3779B97F4A7C15ull * (trial + 1));
}

UnionBound union_bound(std::uint32_t n, std::uint32_t h, std::uint32_t m, double p) {
  if (n < 1 || h < 2 || m <= n) throw std::invalid_argument("union_bound needs n >= 1, h >= 2, m > n");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("union_bound needs 0 < p < 1");
  const std::uint64_t exact = binomial_saturating(m - n, h - 1);
  const double exponent = exact == UINT64_MAX ? std::exp(log_binomial(m - n, h - 1)) : static_cast<double>(exact);
  const double ln_value = log_binomial(m, n) + n * std::log(2.0) +
                          exponent * std::log1p(-std::pow(p, static_cast<double>(n)));
  UnionBound out;
  out.log10_value = ln_value / std::log(10.0);
  out.value = std::exp(ln_value);
  return out;
}

EcFraction estimate_ec_fraction(const RandomModel& model, std::uint32_t n, std::uint32_t trials,
                                unsigned threads) {
  if (trials < 1) throw std::invalid_argument("estimate_ec_fraction needs at least one trial");
  std::vector<char> verdicts(trials, 0);
  std::vector<std::size_t> edges(trials, 0);
  std::atomic<std::uint32_t> next{0};
  auto worker = [&] {
    for (std::uint32_t i; (i = next.fetch_add(1)) < trials;) {
      const RandomModel trial(model.h, model.m, model.p, trial_seed(model.seed, i));
      const Hypergraph hg = sample(trial);
      edges[i] = hg.edge_count();
      verdicts[i] = is_nec(hg, n).holds ? 1 : 0;
    }
  };
  const unsigned workers = std::max(1u, std::min(threads, trials));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }

  EcFraction out;
  std::uint32_t passed = 0;
  for (std::uint32_t i = 0; i < trials; ++i) {
    out.verdicts.push_back(verdicts[i] != 0);
    passed += verdicts[i];
  }
  out.edge_counts = std::move(edges);
  out.fraction = static_cast<double>(passed) / trials;
  return out;
}

}  // namespace echg
