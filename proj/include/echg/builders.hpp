#pragma once

#include <cstdint>
#include <string>

#include "echg/designs.hpp"
#include "echg/hypergraph.hpp"

namespace echg {

/// A constructed hypergraph with its bookkeeping. `guaranteed_ec` is the
/// existential-closure level a known theorem guarantees for the inputs (0 if
/// none applies); the builders compute it but never refuse to build.
struct BuildResult {
  Hypergraph graph;
  std::size_t raw_edges = 0;
  std::size_t unique_edges = 0;
  /// Edge count the construction predicts when no two source sets share an
  /// h-subset; 0 when no prediction applies.
  std::size_t predicted_edges = 0;
  std::uint32_t guaranteed_ec = 0;
  std::string provenance{};
  std::string guarantee_note{};
};

/*
 * H_L from a family of mutually orthogonal Latin squares of order h + 1.
 * Vertex r * (h+1) + c is cell (r, c). Edges are all h-subsets of every row,
 * every column, and every symbol class of every square. For a pairwise
 * orthogonal family with h >= 3 no h-set arises twice, so the count is
 * (l + 2)(h + 1)^2. Throws std::invalid_argument for order < 4.
 */
BuildResult build_from_mols(const MolsSet& mols);

/// H_{D,h}: all h-subsets of every block. Requires 3 <= h <= k and a design
/// that passes validate_design; throws std::invalid_argument otherwise.
BuildResult build_from_design(const Design& design, std::uint32_t h, const std::string& label = "design");

}  // namespace echg
