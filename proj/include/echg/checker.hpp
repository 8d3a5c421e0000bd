#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "echg/hypergraph.hpp"

namespace echg {

/// A caller passed arguments violating an operation's preconditions. Distinct
/// from a negative verdict.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// True iff X u {z} is an edge for every z in T and X u {s} is not an edge for
/// every s in S \ T. Throws ContractError unless |X| = h - 1, X and S are
/// disjoint, and T is a subset of S. Sets may be given in any order.
bool correctly_joined(const Hypergraph& hg, const VertexSet& x, const VertexSet& t, const VertexSet& s);

/// Lexicographically first (h-1)-subset of V \ S correctly joined to T and
/// S \ T, or nullopt. Throws ContractError unless T is a subset of S.
std::optional<VertexSet> find_witness(const Hypergraph& hg, const VertexSet& s, const VertexSet& t);

enum class Engine { kOptimized, kNaive };

struct CheckOptions {
  Engine engine = Engine::kOptimized;
  unsigned threads = 1;
  bool record_witnesses = false;
};

struct Witness {
  VertexSet s;
  VertexSet t;
  VertexSet x;
};

struct Counterexample {
  VertexSet s;
  VertexSet t;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct CheckStats {
  /// Candidate sets X tested. Counted up to and including the failing S, so
  /// the figure does not depend on the thread count.
  std::uint64_t candidates_examined = 0;
  std::uint64_t s_sets_examined = 0;
  /// n > m - (h - 1): no (h-1)-set fits outside any n-set.
  bool too_few_vertices = false;
  std::chrono::milliseconds elapsed{0};
};

struct CheckResult {
  bool holds = false;
  std::uint32_t n = 0;
  std::optional<Counterexample> counterexample;
  /// One entry per (S, T) with the first witness found, in (S, T-mask)
  /// order; filled only when CheckOptions::record_witnesses is set.
  std::vector<Witness> witness_log;
  CheckStats stats;
};

/*
 * Decides whether `hg` is n-existentially closed.
 *
 * n-sets S are visited in lexicographic order. For each S the optimized
 * engine scans (h-1)-subsets X of V \ S in lexicographic order and reads off
 * which members of S complete X to an edge from a precomputed link bitmap;
 * the scan stops once every T subset of S has a witness. The naive engine
 * loops over S, T and X directly with edge lookups.
 *
 * On failure the counterexample is the lexicographically least failing S and,
 * within it, the least T by bitmask (bit i selects the i-th smallest member
 * of S). Both engines and every thread count report the same counterexample.
 *
 * When n > m there is no n-set at all; the result is holds = false with no
 * counterexample and stats.too_few_vertices set. When n > m - (h - 1) but
 * n <= m, the first S fails with T empty.
 */
CheckResult is_nec(const Hypergraph& hg, std::uint32_t n, const CheckOptions& options = {});

struct MaxEcResult {
  /// Largest n with the property, 0 when not even 1-e.c.
  std::uint32_t max_n = 0;
  /// The failing check at max_n + 1.
  CheckResult failure;
};

/// Ascends n = 1, 2, ... and stops at the first failure; valid because an
/// n-e.c. hypergraph is m-e.c. for every m <= n.
MaxEcResult max_ec(const Hypergraph& hg, const CheckOptions& options = {});

/// n * 2^(n-1): fewest edges an n-e.c. hypergraph can have.
std::uint64_t min_edges_bound(std::uint32_t n);

/// n + l where l is the least positive integer with C(l, h-1) >= 2^n.
std::uint64_t min_vertices_bound(std::uint32_t n, std::uint32_t h);

}  // namespace echg
