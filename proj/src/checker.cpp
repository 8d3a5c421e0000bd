#include "echg/checker.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <unordered_map>

namespace echg {

namespace {

constexpr std::uint32_t kMaxN = 63;

/// X u {s} as a sorted h-set, X sorted and s not in X.
void join_into(std::span<const Vertex> x, Vertex s, VertexSet& out) {
  out.clear();
  auto it = std::lower_bound(x.begin(), x.end(), s);
  out.insert(out.end(), x.begin(), it);
  out.push_back(s);
  out.insert(out.end(), it, x.end());
}

VertexSet sorted_copy(const VertexSet& s) {
  VertexSet out = s;
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet complement_of(const VertexSet& s, std::uint32_t m) {
  VertexSet rest;
  rest.reserve(m - s.size());
  std::size_t j = 0;
  for (Vertex v = 0; v < m; ++v) {
    if (j < s.size() && s[j] == v) {
      ++j;
      continue;
    }
    rest.push_back(v);
  }
  return rest;
}

VertexSet members_of_mask(const VertexSet& s, std::uint64_t mask) {
  VertexSet t;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (mask >> i & 1) t.push_back(s[i]);
  return t;
}

// Assumes sorted inputs satisfying the contract.
bool joined_unchecked(const Hypergraph& hg, std::span<const Vertex> x, std::span<const Vertex> s,
                      std::uint64_t t_mask, VertexSet& scratch) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    join_into(x, s[i], scratch);
    const bool want = t_mask >> i & 1;
    if (hg.has_sorted_edge(scratch) != want) return false;
  }
  return true;
}

/*
 * For every (h-1)-set X contained in some edge, the bitmap of vertices s with
 * X u {s} an edge. Entries are addressed by the colex rank of X: densely when
 * the table fits the word budget, through a hash map otherwise.
 */
class LinkTable {
 public:
  explicit LinkTable(const Hypergraph& hg)
      : words_((hg.vertex_count() + 63) / 64) {
    const std::uint32_t h = hg.uniformity();
    const std::uint64_t subsets = binomial(hg.vertex_count(), h - 1);  // throws if rank overflows
    dense_ = subsets <= kDenseWordBudget / words_;
    if (dense_) bits_.assign(subsets * words_, 0);

    std::vector<Vertex> x(h - 1);
    for (std::size_t i = 0; i < hg.edge_count(); ++i) {
      const auto e = hg.edge(i);
      for (std::uint32_t drop = 0; drop < h; ++drop) {
        std::size_t w = 0;
        for (std::uint32_t j = 0; j < h; ++j)
          if (j != drop) x[w++] = e[j];
        std::uint64_t* row = slot(rank_colex(x), /*create=*/true);
        row[e[drop] / 64] |= std::uint64_t{1} << (e[drop] % 64);
      }
    }
  }

  /// Link bitmap of the sorted (h-1)-set with the given colex rank, or null.
  const std::uint64_t* find(std::uint64_t rank) const {
    if (dense_) return bits_.data() + rank * words_;
    const auto it = sparse_.find(rank);
    return it == sparse_.end() ? nullptr : bits_.data() + it->second;
  }

 private:
  static constexpr std::uint64_t kDenseWordBudget = std::uint64_t{1} << 24;

  std::uint64_t* slot(std::uint64_t rank, bool create) {
    if (dense_) return bits_.data() + rank * words_;
    auto [it, inserted] = sparse_.try_emplace(rank, bits_.size());
    if (inserted && create) bits_.resize(bits_.size() + words_, 0);
    return bits_.data() + it->second;
  }

  std::size_t words_;
  bool dense_ = false;
  std::vector<std::uint64_t> bits_;
  std::unordered_map<std::uint64_t, std::size_t> sparse_;
};

/// Which subsets T of the current S already have a witness.
class PatternTracker {
 public:
  explicit PatternTracker(std::uint32_t n) : total_(std::uint64_t{1} << n), dense_(n <= 20) {
    if (dense_) seen_.assign(total_, false);
  }

  void reset() {
    if (dense_)
      std::fill(seen_.begin(), seen_.end(), false);
    else
      sparse_.clear();
    found_ = 0;
  }

  /// Marks the pattern; true if it was new.
  bool insert(std::uint64_t pattern) {
    if (dense_) {
      if (seen_[pattern]) return false;
      seen_[pattern] = true;
    } else if (!sparse_.try_emplace(pattern, true).second) {
      return false;
    }
    ++found_;
    return true;
  }

  bool complete() const { return found_ == total_; }

  std::uint64_t least_missing() const {
    for (std::uint64_t p = 0; p < total_; ++p)
      if (dense_ ? !seen_[p] : !sparse_.contains(p)) return p;
    return total_;
  }

 private:
  std::uint64_t total_;
  bool dense_;
  std::uint64_t found_ = 0;
  std::vector<bool> seen_;
  std::unordered_map<std::uint64_t, bool> sparse_;
};

struct SResult {
  bool ok = true;
  std::uint64_t failing_t = 0;
  std::uint64_t candidates = 0;
};

class OptimizedScanner {
 public:
  OptimizedScanner(const Hypergraph& hg, const LinkTable& links, std::uint32_t n, bool record)
      : hg_(hg), links_(links), n_(n), record_(record), tracker_(n) {}

  SResult scan(const VertexSet& s, std::vector<Witness>* log) {
    SResult result;
    tracker_.reset();
    if (record_) firsts_.clear();
    const VertexSet rest = complement_of(s, hg_.vertex_count());
    const std::uint32_t k = hg_.uniformity() - 1;
    if (rest.size() >= k) {
      auto combo = first_combination(k);
      VertexSet x(k);
      do {
        for (std::uint32_t i = 0; i < k; ++i) x[i] = rest[combo[i]];
        ++result.candidates;
        std::uint64_t pattern = 0;
        if (const std::uint64_t* link = links_.find(rank_colex(x))) {
          for (std::uint32_t i = 0; i < n_; ++i)
            if (link[s[i] / 64] >> (s[i] % 64) & 1) pattern |= std::uint64_t{1} << i;
        }
        if (tracker_.insert(pattern)) {
          if (record_) firsts_.emplace(pattern, x);
          if (tracker_.complete()) break;
        }
      } while (next_combination(combo, static_cast<std::uint32_t>(rest.size())));
    }
    if (!tracker_.complete()) {
      result.ok = false;
      result.failing_t = tracker_.least_missing();
    }
    if (record_ && log) {
      std::vector<std::pair<std::uint64_t, VertexSet>> ordered(firsts_.begin(), firsts_.end());
      std::sort(ordered.begin(), ordered.end());
      for (auto& [mask, x] : ordered) log->push_back({s, members_of_mask(s, mask), std::move(x)});
    }
    return result;
  }

 private:
  const Hypergraph& hg_;
  const LinkTable& links_;
  std::uint32_t n_;
  bool record_;
  PatternTracker tracker_;
  std::unordered_map<std::uint64_t, VertexSet> firsts_;
};

struct ChunkResult {
  bool processed = false;
  std::uint64_t candidates = 0;
  std::uint64_t s_sets = 0;
  std::optional<Counterexample> failure;
  std::vector<Witness> witnesses;
};

CheckResult run_optimized(const Hypergraph& hg, std::uint32_t n, const CheckOptions& options) {
  CheckResult result;
  result.n = n;
  const std::uint32_t m = hg.vertex_count();
  const LinkTable links(hg);
  const std::uint64_t total = binomial(m, n);

  const std::uint64_t chunk_size = 64;
  const std::uint64_t chunk_count = (total + chunk_size - 1) / chunk_size;
  std::vector<ChunkResult> chunks(chunk_count);
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> first_failure{std::numeric_limits<std::uint64_t>::max()};

  auto worker = [&] {
    OptimizedScanner scanner(hg, links, n, options.record_witnesses);
    for (;;) {
      const std::uint64_t c = next_chunk.fetch_add(1);
      if (c >= chunk_count) return;
      const std::uint64_t begin = c * chunk_size;
      if (begin > first_failure.load()) return;
      const std::uint64_t end = std::min(total, begin + chunk_size);
      ChunkResult& out = chunks[c];
      auto s_combo = unrank_lex(begin, m, n);
      VertexSet s(n);
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        if (idx > first_failure.load()) break;
        std::copy(s_combo.begin(), s_combo.end(), s.begin());
        const SResult r = scanner.scan(s, options.record_witnesses ? &out.witnesses : nullptr);
        out.candidates += r.candidates;
        ++out.s_sets;
        if (!r.ok) {
          out.failure = Counterexample{s, members_of_mask(s, r.failing_t)};
          std::uint64_t seen = first_failure.load();
          while (idx < seen && !first_failure.compare_exchange_weak(seen, idx)) {
          }
          break;
        }
        next_combination(s_combo, m);
      }
      out.processed = true;
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  // Every chunk before the first failing one ran to completion, whatever the
  // schedule, so summing in chunk order is deterministic.
  result.holds = true;
  for (auto& chunk : chunks) {
    if (!chunk.processed) break;
    result.stats.candidates_examined += chunk.candidates;
    result.stats.s_sets_examined += chunk.s_sets;
    std::move(chunk.witnesses.begin(), chunk.witnesses.end(), std::back_inserter(result.witness_log));
    if (chunk.failure) {
      result.holds = false;
      result.counterexample = std::move(chunk.failure);
      break;
    }
  }
  return result;
}

CheckResult run_naive(const Hypergraph& hg, std::uint32_t n, const CheckOptions& options) {
  CheckResult result;
  result.n = n;
  result.holds = true;
  const std::uint32_t m = hg.vertex_count();
  const std::uint32_t k = hg.uniformity() - 1;
  VertexSet scratch;
  VertexSet x(k);
  for_each_combination(m, n, [&](std::span<const std::uint32_t> s_span) {
    const VertexSet s(s_span.begin(), s_span.end());
    const VertexSet rest = complement_of(s, m);
    ++result.stats.s_sets_examined;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) {
      bool found = false;
      for_each_combination(static_cast<std::uint32_t>(rest.size()), k, [&](std::span<const std::uint32_t> c) {
        for (std::uint32_t i = 0; i < k; ++i) x[i] = rest[c[i]];
        ++result.stats.candidates_examined;
        found = joined_unchecked(hg, x, s, t, scratch);
        return !found;
      });
      if (found) {
        if (options.record_witnesses) result.witness_log.push_back({s, members_of_mask(s, t), x});
        continue;
      }
      result.holds = false;
      result.counterexample = Counterexample{s, members_of_mask(s, t)};
      return false;
    }
    return true;
  });
  return result;
}

}  // namespace

bool correctly_joined(const Hypergraph& hg, const VertexSet& x, const VertexSet& t, const VertexSet& s) {
  const VertexSet xs = sorted_copy(x), ts = sorted_copy(t), ss = sorted_copy(s);
  const std::uint32_t m = hg.vertex_count();
  const auto valid_set = [m](const VertexSet& v) {
    return is_strictly_increasing(v) && (v.empty() || v.back() < m);
  };
  if (!valid_set(xs) || !valid_set(ts) || !valid_set(ss))
    throw ContractError("correctly_joined: sets must hold distinct in-range vertices");
  if (xs.size() != hg.uniformity() - 1) throw ContractError("correctly_joined: |X| must be h - 1");
  if (!std::includes(ss.begin(), ss.end(), ts.begin(), ts.end()))
    throw ContractError("correctly_joined: T must be a subset of S");
  for (Vertex v : xs)
    if (std::binary_search(ss.begin(), ss.end(), v)) throw ContractError("correctly_joined: X must avoid S");

  VertexSet scratch;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    join_into(xs, ss[i], scratch);
    const bool want = std::binary_search(ts.begin(), ts.end(), ss[i]);
    if (hg.has_sorted_edge(scratch) != want) return false;
  }
  return true;
}

std::optional<VertexSet> find_witness(const Hypergraph& hg, const VertexSet& s, const VertexSet& t) {
  const VertexSet ss = sorted_copy(s), ts = sorted_copy(t);
  if (!is_strictly_increasing(ss) || (!ss.empty() && ss.back() >= hg.vertex_count()))
    throw ContractError("find_witness: S must hold distinct in-range vertices");
  if (!is_strictly_increasing(ts) || !std::includes(ss.begin(), ss.end(), ts.begin(), ts.end()))
    throw ContractError("find_witness: T must be a subset of S");

  const VertexSet rest = complement_of(ss, hg.vertex_count());
  const std::uint32_t k = hg.uniformity() - 1;
  std::optional<VertexSet> witness;
  VertexSet x(k), scratch;
  for_each_combination(static_cast<std::uint32_t>(rest.size()), k, [&](std::span<const std::uint32_t> c) {
    for (std::uint32_t i = 0; i < k; ++i) x[i] = rest[c[i]];
    for (Vertex v : ss) {
      join_into(x, v, scratch);
      if (hg.has_sorted_edge(scratch) != std::binary_search(ts.begin(), ts.end(), v)) return true;
    }
    witness = x;
    return false;
  });
  return witness;
}

CheckResult is_nec(const Hypergraph& hg, std::uint32_t n, const CheckOptions& options) {
  if (n < 1) throw std::invalid_argument("is_nec requires n >= 1");
  if (n > kMaxN) throw std::invalid_argument("is_nec supports n <= 63");
  const auto start = std::chrono::steady_clock::now();
  CheckResult result;
  const std::uint32_t m = hg.vertex_count();
  if (n > m) {
    result.n = n;
    result.holds = false;
    result.stats.too_few_vertices = true;
  } else {
    result = options.engine == Engine::kNaive ? run_naive(hg, n, options) : run_optimized(hg, n, options);
    result.stats.too_few_vertices = n > m - (hg.uniformity() - 1);
  }
  result.stats.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return result;
}

MaxEcResult max_ec(const Hypergraph& hg, const CheckOptions& options) {
  MaxEcResult out;
  for (std::uint32_t n = 1;; ++n) {
    CheckResult r = is_nec(hg, n, options);
    if (!r.holds) {
      out.max_n = n - 1;
      out.failure = std::move(r);
      return out;
    }
  }
}

std::uint64_t min_edges_bound(std::uint32_t n) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("min_edges_bound requires 1 <= n <= 63");
  return std::uint64_t{n} << (n - 1);
}

std::uint64_t min_vertices_bound(std::uint32_t n, std::uint32_t h) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("min_vertices_bound requires 1 <= n <= 63");
  if (h < 2) throw std::invalid_argument("min_vertices_bound requires h >= 2");
  const std::uint64_t target = std::uint64_t{1} << n;
  std::uint64_t l = 1;
  while (binomial_saturating(l, h - 1) < target) ++l;
  return n + l;
}

}  // namespace echg
