#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "echg/hypergraph.hpp"
#include "test_support.hpp"

using namespace echg;

namespace {

Hypergraph two_triples() { return Hypergraph(3, 4, {{0, 1, 2}, {0, 2, 3}}); }

}  // namespace

TEST(Hypergraph, ConstructionCanonicalizes) {
  const Hypergraph hg = two_triples();
  EXPECT_EQ(hg.edge_count(), 2u);
  EXPECT_EQ(Hypergraph(3, 4).edge_count(), 0u);

  const Hypergraph twice(3, 4, {{0, 1, 2}, {2, 1, 0}});
  EXPECT_EQ(twice.edge_count(), 1u);
  EXPECT_EQ(twice.raw_edge_count(), 2u);
  EXPECT_EQ(twice.duplicates_dropped(), 1u);
}

TEST(Hypergraph, ConstructionRejectsBadInput) {
  EXPECT_THROW(Hypergraph(3, 4, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, 4, {{0, 1, 4}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, 4, {{0, 1, 1}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(1, 4), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, 2), std::invalid_argument);
  EXPECT_NO_THROW(Hypergraph(3, 3, {{0, 1, 2}}));  // m = h is a legal value
}

TEST(Hypergraph, HasEdge) {
  const Hypergraph hg = two_triples();
  EXPECT_TRUE(hg.has_edge(VertexSet{0, 1, 2}));
  EXPECT_TRUE(hg.has_edge(VertexSet{2, 0, 1}));
  EXPECT_FALSE(hg.has_edge(VertexSet{1, 2, 3}));
  EXPECT_FALSE(hg.has_edge(VertexSet{0, 1, 3}));
  EXPECT_TRUE(hg.has_edge(hg.edge(0)));
  EXPECT_THROW(hg.has_edge(VertexSet{0, 1}), std::invalid_argument);
  EXPECT_THROW(hg.has_edge(VertexSet{0, 1, 9}), std::invalid_argument);
}

TEST(Hypergraph, Complement) {
  const Hypergraph c = complement(two_triples());
  EXPECT_EQ(c.edge_count(), 2u);
  EXPECT_TRUE(c.has_edge(VertexSet{0, 1, 3}));
  EXPECT_TRUE(c.has_edge(VertexSet{1, 2, 3}));
  EXPECT_EQ(complement(complete_hypergraph(3, 6)).edge_count(), 0u);
  EXPECT_EQ(complement(c), two_triples());
}

TEST(Hypergraph, DeleteVertex) {
  const auto sub = delete_vertex(two_triples(), 3);
  EXPECT_EQ(sub.graph.vertex_count(), 3u);
  EXPECT_EQ(sub.graph.edge_list(), (std::vector<VertexSet>{{0, 1, 2}}));
  EXPECT_EQ(sub.original, (std::vector<Vertex>{0, 1, 2}));

  const auto relabeled = delete_vertex(two_triples(), 1);
  EXPECT_EQ(relabeled.graph.edge_list(), (std::vector<VertexSet>{{0, 1, 2}}));  // {0,2,3} -> {0,1,2}
  EXPECT_EQ(relabeled.relabel(3), std::optional<Vertex>(2));
  EXPECT_EQ(relabeled.relabel(1), std::nullopt);

  const Hypergraph isolated(3, 5, {{0, 1, 2}, {1, 2, 3}});
  EXPECT_EQ(delete_vertex(isolated, 4).graph.edge_count(), 2u);

  const Hypergraph single(3, 4, {{0, 1, 2}});
  EXPECT_EQ(delete_vertex(single, 0).graph.edge_count(), 0u);

  EXPECT_THROW(delete_vertex(Hypergraph(3, 3, {{0, 1, 2}}), 0), std::invalid_argument);
}

TEST(Hypergraph, Neighbourhoods) {
  const Hypergraph hg = two_triples();
  EXPECT_EQ(hg.neighbourhood(0), (VertexSet{1, 2, 3}));
  EXPECT_EQ(Hypergraph(3, 5, {{0, 1, 2}}).neighbourhood(4), VertexSet{});
  EXPECT_EQ(complete_hypergraph(3, 5).neighbourhood(2), (VertexSet{0, 1, 3, 4}));

  EXPECT_EQ(complete_hypergraph(3, 5).anti_neighbourhood(1), VertexSet{});
  EXPECT_EQ(Hypergraph(3, 5).anti_neighbourhood(1), (VertexSet{0, 2, 3, 4}));
  // Non-edges of two_triples are {0,1,3} and {1,2,3}; only the first contains 0.
  EXPECT_EQ(hg.anti_neighbourhood(0), (VertexSet{1, 3}));
}

TEST(Hypergraph, Induced) {
  const Hypergraph hg = two_triples();
  EXPECT_EQ(induced(hg, {0, 1, 2, 3}).graph, hg);
  EXPECT_EQ(induced(hg, {2, 0, 1}).graph.edge_count(), 1u);
  EXPECT_EQ(induced(hg, {1, 2, 3}).graph.edge_count(), 0u);
  EXPECT_THROW(induced(hg, {0, 1}), std::invalid_argument);
}

TEST(Hypergraph, Degree) {
  EXPECT_EQ(two_triples().degree(0), 2u);
  EXPECT_EQ(two_triples().degree(1), 1u);
  EXPECT_EQ(Hypergraph(3, 5).degree(0), 0u);
  EXPECT_EQ(complete_hypergraph(3, 7).degree(4), binomial(6, 2));
}

TEST(HypergraphProperties, RandomInstances) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 150; ++trial) {
    const std::uint32_t h = 2 + rng() % 3;
    const std::uint32_t m = h + 1 + rng() % 6;
    const Hypergraph hg = test::random_hypergraph(rng, h, m, 0.4);

    // Canonicalization: shuffled members, shuffled and duplicated edges.
    auto edges = hg.edge_list();
    for (auto& e : edges) std::shuffle(e.begin(), e.end(), rng);
    if (!edges.empty()) edges.push_back(edges.front());
    std::shuffle(edges.begin(), edges.end(), rng);
    EXPECT_EQ(Hypergraph(h, m, edges), hg);

    const Hypergraph comp = complement(hg);
    EXPECT_EQ(complement(comp), hg);
    EXPECT_EQ(hg.edge_count() + comp.edge_count(), binomial(m, h));

    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < m; ++v) {
      degree_sum += hg.degree(v);
      EXPECT_EQ(hg.anti_neighbourhood(v), comp.neighbourhood(v));
      VertexSet rest;
      for (Vertex u = 0; u < m; ++u)
        if (u != v) rest.push_back(u);
      const auto a = induced(hg, rest);
      const auto b = delete_vertex(hg, v);
      EXPECT_EQ(a.graph, b.graph);
      EXPECT_EQ(a.original, b.original);
    }
    EXPECT_EQ(degree_sum, h * hg.edge_count());
  }
}

TEST(HypergraphProperties, MaskAndSequenceIndexAgree) {
  // m = 70 forces the sequence-keyed index; compare against a std::set oracle.
  std::mt19937_64 rng(7);
  std::vector<VertexSet> edges;
  std::set<VertexSet> oracle;
  for (int i = 0; i < 300; ++i) {
    VertexSet e;
    while (e.size() < 3) {
      const Vertex v = rng() % 70;
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    edges.push_back(e);
    std::sort(e.begin(), e.end());
    oracle.insert(e);
  }
  const Hypergraph big(3, 70, edges);
  EXPECT_EQ(big.edge_count(), oracle.size());
  for (int i = 0; i < 2000; ++i) {
    VertexSet e;
    if (i % 2 == 0) {
      auto it = oracle.begin();
      std::advance(it, rng() % oracle.size());
      e = *it;
    } else {
      e = test::random_subset(rng, 70, 3);
    }
    EXPECT_EQ(big.has_edge(e), oracle.contains(e));
  }

  // The same edge family shifted into [0, 64) answers identically with masks.
  std::vector<VertexSet> small_edges;
  for (auto e : oracle) {
    for (auto& v : e) v %= 60;
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) == e.end()) small_edges.push_back(e);
  }
  const Hypergraph small(3, 60, small_edges);
  const Hypergraph small_as_seq(3, 70, small_edges);
  for (const auto& e : small.edge_list()) EXPECT_TRUE(small_as_seq.has_edge(e));
  for (int i = 0; i < 2000; ++i) {
    const auto e = test::random_subset(rng, 60, 3);
    EXPECT_EQ(small.has_edge(e), small_as_seq.has_edge(e));
  }
}
