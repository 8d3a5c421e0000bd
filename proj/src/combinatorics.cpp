#include "echg/combinatorics.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace echg {

namespace {

// Multiplicative formula with gcd reduction; `ok` cleared on overflow.
std::uint64_t binomial_impl(std::uint64_t n, std::uint64_t k, bool& ok) {
  ok = true;
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i, kept exact by cancelling the divisor first.
    std::uint64_t num = n - k + i;
    std::uint64_t den = i;
    const std::uint64_t g1 = std::gcd(result, den);
    result /= g1;
    den /= g1;
    const std::uint64_t g2 = std::gcd(num, den);
    num /= g2;
    den /= g2;
    // den is now 1 since result * num is divisible by i.
    if (result > std::numeric_limits<std::uint64_t>::max() / num) {
      ok = false;
      return std::numeric_limits<std::uint64_t>::max();
    }
    result = result * num / den;
  }
  return result;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  bool ok = true;
  const auto value = binomial_impl(n, k, ok);
  if (!ok) throw std::overflow_error("binomial coefficient exceeds 64 bits");
  return value;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  bool ok = true;
  return binomial_impl(n, k, ok);
}

bool next_combination(std::span<std::uint32_t> combo, std::uint32_t n) {
  const std::size_t k = combo.size();
  if (k == 0) return false;
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::uint32_t> first_combination(std::uint32_t k) {
  std::vector<std::uint32_t> combo(k);
  std::iota(combo.begin(), combo.end(), 0u);
  return combo;
}

std::vector<std::uint32_t> unrank_lex(std::uint64_t rank, std::uint32_t n, std::uint32_t k) {
  std::vector<std::uint32_t> combo;
  combo.reserve(k);
  std::uint32_t next = 0;
  for (std::uint32_t slot = 0; slot < k; ++slot) {
    for (std::uint32_t c = next; c < n; ++c) {
      // Number of combinations whose element at `slot` is c.
      const auto block = binomial_saturating(n - c - 1, k - slot - 1);
      if (rank < block) {
        combo.push_back(c);
        next = c + 1;
        break;
      }
      rank -= block;
    }
  }
  if (combo.size() != k) throw std::out_of_range("unrank_lex: rank out of range");
  return combo;
}

std::uint64_t rank_colex(std::span<const std::uint32_t> combo) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < combo.size(); ++i) rank += binomial_saturating(combo[i], i + 1);
  return rank;
}

bool is_strictly_increasing(std::span<const std::uint32_t> values) {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i - 1] >= values[i]) return false;
  return true;
}

}  // namespace echg
