#include "echg/builders.hpp"

#include <algorithm>
#include <stdexcept>

namespace echg {

namespace {

// Appends every h-subset of `source` (sorted) to `edges`.
void add_subsets(const VertexSet& source, std::uint32_t h, std::vector<VertexSet>& edges) {
  for_each_combination(static_cast<std::uint32_t>(source.size()), h, [&](std::span<const std::uint32_t> c) {
    VertexSet e(h);
    for (std::uint32_t i = 0; i < h; ++i) e[i] = source[c[i]];
    edges.push_back(std::move(e));
  });
}

}  // namespace

BuildResult build_from_mols(const MolsSet& mols) {
  const std::uint32_t order = mols.order();
  if (order < 4) throw std::invalid_argument("MOLS construction needs order >= 4 (h >= 3)");
  const std::uint32_t h = order - 1;

  std::vector<VertexSet> lines;
  for (std::uint32_t r = 0; r < order; ++r) {
    VertexSet row, col;
    for (std::uint32_t c = 0; c < order; ++c) {
      row.push_back(r * order + c);
      col.push_back(c * order + r);
    }
    lines.push_back(std::move(row));
    lines.push_back(std::move(col));
  }
  for (const auto& square : mols.squares()) {
    std::vector<VertexSet> classes(order);
    for (std::uint32_t cell = 0; cell < order * order; ++cell) classes[square.cells()[cell]].push_back(cell);
    for (auto& cls : classes) lines.push_back(std::move(cls));
  }

  std::vector<VertexSet> edges;
  for (const auto& line : lines) add_subsets(line, h, edges);

  BuildResult out{.graph = Hypergraph(h, order * order, edges)};
  out.raw_edges = edges.size();
  out.unique_edges = out.graph.edge_count();
  out.predicted_edges = (mols.size() + 2) * order * order;
  out.provenance = "built-from: mols q=" + std::to_string(order) + " squares=" + std::to_string(mols.size());
  if (mols.is_complete()) {
    out.guaranteed_ec = 2;
    out.guarantee_note = "complete MOLS of order h+1 with h >= 3: 2-e.c.";
  } else {
    out.guarantee_note = "incomplete MOLS family: no e.c. guarantee";
  }
  return out;
}

BuildResult build_from_design(const Design& design, std::uint32_t h, const std::string& label) {
  if (h < 3 || h > design.k)
    throw std::invalid_argument("design construction needs 3 <= h <= k, got h=" + std::to_string(h));
  const auto report = validate_design(design);
  if (!report.valid) throw std::invalid_argument("input is not a valid t-design");

  std::vector<VertexSet> edges;
  for (const auto& block : design.blocks) add_subsets(block, h, edges);

  BuildResult out{.graph = Hypergraph(h, design.v, edges)};
  out.raw_edges = edges.size();
  out.unique_edges = out.graph.edge_count();
  out.provenance = "built-from: " + label + " t=" + std::to_string(design.t) + " v=" + std::to_string(design.v) +
                   " k=" + std::to_string(design.k) + " lambda=" + std::to_string(design.lambda) +
                   " h=" + std::to_string(h);

  const std::uint32_t t = design.t, v = design.v, k = design.k;
  const bool simple = design.lambda == 1;
  // With lambda = 1 and h > t two blocks cannot share an h-set.
  if (simple && h >= t + 1) out.predicted_edges = design.block_count() * binomial(k, h);

  out.guarantee_note = "no e.c. guarantee";
  if (simple && k >= 2 * t && v >= k + t && h >= t + 1 && h + t <= k + 1) {
    out.guaranteed_ec = t;
    out.guarantee_note = "t-(v,k,1) with k >= 2t, v >= k+t, t+1 <= h <= k-t+1: t-e.c.";
  }
  if (simple && t == 2 && k >= 4 && v >= k + 2 && h + 1 <= k && out.guaranteed_ec < 2) {
    out.guaranteed_ec = 2;
    out.guarantee_note = "(v,k,1)-BIBD with k >= 4, v >= k+2, 3 <= h <= k-1: 2-e.c.";
  }
  if (out.guaranteed_ec == 0 && h == k && v > k && design.block_count() < binomial(v, k)) {
    out.guaranteed_ec = 1;
    out.guarantee_note = "design with v > k viewed as a k-uniform hypergraph: 1-e.c.";
  }
  return out;
}

}  // namespace echg
