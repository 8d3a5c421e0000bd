#include "echg/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace echg {

namespace {

std::uint64_t mask_of(std::span<const Vertex> e) {
  std::uint64_t mask = 0;
  for (Vertex v : e) mask |= std::uint64_t{1} << v;
  return mask;
}

}  // namespace

std::size_t Hypergraph::SequenceHash::operator()(const VertexSet& s) const noexcept {
  // FNV-1a over the labels.
  std::uint64_t hash = 1469598103934665603ull;
  for (Vertex v : s) {
    hash ^= v;
    hash *= 1099511628211ull;
  }
  return static_cast<std::size_t>(hash);
}

Hypergraph::Hypergraph(std::uint32_t h, std::uint32_t m, const std::vector<VertexSet>& edges)
    : h_(h), m_(m), raw_edge_count_(edges.size()) {
  if (h < 2) throw std::invalid_argument("uniformity h must be at least 2");
  if (m < h) throw std::invalid_argument("vertex count m must be at least h");

  std::vector<VertexSet> canonical;
  canonical.reserve(edges.size());
  for (const auto& raw : edges) {
    VertexSet e = raw;
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("edge has a repeated vertex");
    if (e.size() != h)
      throw std::invalid_argument("edge has " + std::to_string(e.size()) + " members, expected " +
                                  std::to_string(h));
    if (!e.empty() && e.back() >= m)
      throw std::invalid_argument("edge member " + std::to_string(e.back()) + " out of range [0, " +
                                  std::to_string(m) + ")");
    canonical.push_back(std::move(e));
  }
  std::sort(canonical.begin(), canonical.end());
  canonical.erase(std::unique(canonical.begin(), canonical.end()), canonical.end());

  edge_count_ = canonical.size();
  flat_.reserve(edge_count_ * h_);
  for (const auto& e : canonical) flat_.insert(flat_.end(), e.begin(), e.end());

  if (m_ <= kMaskVertexLimit) {
    MaskIndex index;
    index.reserve(edge_count_);
    for (std::size_t i = 0; i < edge_count_; ++i) index.insert(mask_of(edge(i)));
    index_ = std::move(index);
  } else {
    SequenceIndex index(canonical.begin(), canonical.end());
    index_ = std::move(index);
  }
}

std::vector<VertexSet> Hypergraph::edge_list() const {
  std::vector<VertexSet> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < edge_count_; ++i) {
    const auto e = edge(i);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

void Hypergraph::check_vertex(Vertex v) const {
  if (v >= m_)
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(m_) + ")");
}

bool Hypergraph::has_edge(std::span<const Vertex> e) const {
  VertexSet sorted(e.begin(), e.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() != h_ || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("has_edge expects exactly h distinct vertices");
  check_vertex(sorted.back());
  return has_sorted_edge(sorted);
}

bool Hypergraph::has_sorted_edge(std::span<const Vertex> e) const {
  if (const auto* masks = std::get_if<MaskIndex>(&index_)) return masks->contains(mask_of(e));
  return std::get<SequenceIndex>(index_).contains(VertexSet(e.begin(), e.end()));
}

std::size_t Hypergraph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<std::size_t>(std::count(flat_.begin(), flat_.end(), v));
}

VertexSet Hypergraph::neighbourhood(Vertex v) const {
  check_vertex(v);
  std::vector<bool> seen(m_, false);
  for (std::size_t i = 0; i < edge_count_; ++i) {
    const auto e = edge(i);
    if (std::find(e.begin(), e.end(), v) == e.end()) continue;
    for (Vertex u : e) seen[u] = true;
  }
  seen[v] = false;
  VertexSet out;
  for (Vertex u = 0; u < m_; ++u)
    if (seen[u]) out.push_back(u);
  return out;
}

VertexSet Hypergraph::anti_neighbourhood(Vertex v) const {
  check_vertex(v);
  // u is in A(v) iff some h-set through both u and v is a non-edge, i.e. the
  // co-degree of {u, v} falls short of C(m - 2, h - 2).
  const std::uint64_t through_pair = binomial_saturating(m_ - 2, h_ - 2);
  std::vector<std::uint64_t> codegree(m_, 0);
  for (std::size_t i = 0; i < edge_count_; ++i) {
    const auto e = edge(i);
    if (std::find(e.begin(), e.end(), v) == e.end()) continue;
    for (Vertex u : e) ++codegree[u];
  }
  VertexSet out;
  for (Vertex u = 0; u < m_; ++u)
    if (u != v && codegree[u] < through_pair) out.push_back(u);
  return out;
}

std::optional<Vertex> Subhypergraph::relabel(Vertex v) const {
  const auto it = std::lower_bound(original.begin(), original.end(), v);
  if (it == original.end() || *it != v) return std::nullopt;
  return static_cast<Vertex>(it - original.begin());
}

Hypergraph complement(const Hypergraph& hg) {
  const auto h = hg.uniformity();
  const auto m = hg.vertex_count();
  std::vector<VertexSet> missing;
  for_each_combination(m, h, [&](std::span<const std::uint32_t> c) {
    if (!hg.has_sorted_edge(c)) missing.emplace_back(c.begin(), c.end());
  });
  return Hypergraph(h, m, missing);
}

Subhypergraph induced(const Hypergraph& hg, const VertexSet& keep) {
  VertexSet sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() < hg.uniformity())
    throw std::invalid_argument("induced subhypergraph needs at least h vertices");
  if (sorted.back() >= hg.vertex_count()) throw std::invalid_argument("induced: vertex out of range");

  std::vector<std::int64_t> new_label(hg.vertex_count(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) new_label[sorted[i]] = static_cast<std::int64_t>(i);

  std::vector<VertexSet> kept;
  for (std::size_t i = 0; i < hg.edge_count(); ++i) {
    const auto e = hg.edge(i);
    VertexSet mapped;
    mapped.reserve(e.size());
    for (Vertex u : e) {
      if (new_label[u] < 0) break;
      mapped.push_back(static_cast<Vertex>(new_label[u]));
    }
    if (mapped.size() == e.size()) kept.push_back(std::move(mapped));
  }
  return {Hypergraph(hg.uniformity(), static_cast<std::uint32_t>(sorted.size()), kept),
          std::move(sorted)};
}

Subhypergraph delete_vertex(const Hypergraph& hg, Vertex v) {
  if (v >= hg.vertex_count()) throw std::invalid_argument("delete_vertex: vertex out of range");
  if (hg.vertex_count() < hg.uniformity() + 1)
    throw std::invalid_argument("delete_vertex: result would have fewer than h vertices");
  VertexSet rest;
  for (Vertex u = 0; u < hg.vertex_count(); ++u)
    if (u != v) rest.push_back(u);
  return induced(hg, rest);
}

Hypergraph complete_hypergraph(std::uint32_t h, std::uint32_t m) {
  std::vector<VertexSet> all;
  for_each_combination(m, h, [&](std::span<const std::uint32_t> c) { all.emplace_back(c.begin(), c.end()); });
  return Hypergraph(h, m, all);
}

}  // namespace echg
