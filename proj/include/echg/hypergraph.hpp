#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "echg/combinatorics.hpp"

namespace echg {

/*
 * Immutable h-uniform simple hypergraph on the vertex set [0, m).
 *
 * Edges are stored flat, each as a strictly increasing run of h labels, in
 * lexicographic order. Membership queries go through a hash index keyed by a
 * 64-bit vertex mask when m <= kMaskVertexLimit, and by the sorted label
 * sequence otherwise. Both paths answer identically.
 */
class Hypergraph {
 public:
  static constexpr std::uint32_t kMaskVertexLimit = 64;

  /// Canonicalizes `edges` (sorts members, sorts edges, drops repeats).
  /// Throws std::invalid_argument on h < 2, m < h, an edge without exactly h
  /// distinct members, or a member outside [0, m).
  Hypergraph(std::uint32_t h, std::uint32_t m, const std::vector<VertexSet>& edges);

  /// Empty hypergraph.
  Hypergraph(std::uint32_t h, std::uint32_t m) : Hypergraph(h, m, {}) {}

  std::uint32_t uniformity() const { return h_; }
  std::uint32_t vertex_count() const { return m_; }
  std::size_t edge_count() const { return edge_count_; }

  /// Number of edges given to the constructor, before deduplication.
  std::size_t raw_edge_count() const { return raw_edge_count_; }
  std::size_t duplicates_dropped() const { return raw_edge_count_ - edge_count_; }

  std::span<const Vertex> edge(std::size_t i) const {
    return {flat_.data() + i * h_, h_};
  }
  std::vector<VertexSet> edge_list() const;

  /// Membership of the h-set `e` (any order). Throws std::invalid_argument if
  /// `e` does not name exactly h distinct in-range vertices.
  bool has_edge(std::span<const Vertex> e) const;

  /// Membership of a strictly increasing, in-range h-set; no validation.
  bool has_sorted_edge(std::span<const Vertex> e) const;

  std::size_t degree(Vertex v) const;

  /// Vertices that share at least one edge with v.
  VertexSet neighbourhood(Vertex v) const;

  /// Vertices that share at least one non-edge h-set with v, i.e. the
  /// neighbourhood of v in the complement. Computed from pair co-degrees.
  VertexSet anti_neighbourhood(Vertex v) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.h_ == b.h_ && a.m_ == b.m_ && a.flat_ == b.flat_;
  }

 private:
  struct SequenceHash {
    std::size_t operator()(const VertexSet& s) const noexcept;
  };
  using MaskIndex = std::unordered_set<std::uint64_t>;
  using SequenceIndex = std::unordered_set<VertexSet, SequenceHash>;

  void check_vertex(Vertex v) const;

  std::uint32_t h_;
  std::uint32_t m_;
  std::size_t edge_count_ = 0;
  std::size_t raw_edge_count_ = 0;
  std::vector<Vertex> flat_;
  std::variant<MaskIndex, SequenceIndex> index_;
};

/// A hypergraph obtained by keeping a subset of vertices, relabeled densely.
/// `original[i]` is the label in the parent hypergraph of new vertex i.
struct Subhypergraph {
  Hypergraph graph;
  std::vector<Vertex> original;

  /// New label of parent vertex `v`, or nullopt if it was dropped.
  std::optional<Vertex> relabel(Vertex v) const;
};

/// All h-sets of [0, m) that are not edges of H.
Hypergraph complement(const Hypergraph& hg);

/// H - v. Requires m >= h + 1.
Subhypergraph delete_vertex(const Hypergraph& hg, Vertex v);

/// H[Y]: edges of H lying inside Y. Requires |Y| >= h; Y may be unsorted.
Subhypergraph induced(const Hypergraph& hg, const VertexSet& keep);

/// The complete h-uniform hypergraph on m vertices.
Hypergraph complete_hypergraph(std::uint32_t h, std::uint32_t m);

}  // namespace echg
