// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Time limits are wall-clock and pinned below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "echg/builders.hpp"
#include "echg/checker.hpp"
#include "echg/designs.hpp"
#include "echg/io.hpp"
#include "echg/random_model.hpp"

using namespace echg;

namespace {

using Clock = std::chrono::steady_clock;

// Instances certified n-e.c. by earlier criteria, rechecked against the bounds.
struct Certified {
  std::string name;
  Hypergraph graph;
  std::uint32_t n;
};
std::vector<Certified> certified;

// Collects failed conditions for one criterion.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string out;
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) out += (i ? "; " : "") + failures_[i];
    if (failures_.size() > 5) out += "; ... " + std::to_string(failures_.size() - 5) + " more";
    return out;
  }

 private:
  std::vector<std::string> failures_;
};

bool holds(const Hypergraph& hg, std::uint32_t n, unsigned threads = 1) {
  return is_nec(hg, n, {.threads = threads}).holds;
}

void certify(Checks& c, const std::string& name, const Hypergraph& hg, std::uint32_t n) {
  const bool ok = holds(hg, n);
  c.expect(ok, name + " not " + std::to_string(n) + "-e.c.");
  if (ok) certified.push_back({name, hg, n});
}

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Checks&)>& body) {
  Checks c;
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  c.expect(seconds < limit_seconds, "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds));
  if (!c.ok()) ++failures;
  std::printf("[%s] AC%-2d %-58s %8.3f s (limit %g s)%s%s\n", c.ok() ? "PASS" : "FAIL", id, title.c_str(), seconds,
              limit_seconds, c.ok() ? "" : "  ", c.summary().c_str());
  std::fflush(stdout);
}

// Every vertex-removal and neighbourhood subgraph of `hg` with at least h
// vertices must be 1-e.c.
void check_local_subgraphs(Checks& c, const std::string& name, const Hypergraph& hg, bool anti) {
  const std::uint32_t m = hg.vertex_count(), h = hg.uniformity();
  for (Vertex v = 0; v < m; ++v) {
    const std::string at = name + " v=" + std::to_string(v);
    c.expect(holds(delete_vertex(hg, v).graph, 1), at + ": H-v not 1-e.c.");
    const VertexSet nv = hg.neighbourhood(v);
    c.expect(nv.size() >= h, at + ": |N(v)| < h");
    if (nv.size() >= h) c.expect(holds(induced(hg, nv).graph, 1), at + ": H[N(v)] not 1-e.c.");
    if (!anti) continue;
    const VertexSet av = hg.anti_neighbourhood(v);
    c.expect(av.size() >= h, at + ": |A(v)| < h");
    if (av.size() >= h) c.expect(holds(induced(hg, av).graph, 1), at + ": H[A(v)] not 1-e.c.");
  }
}

using Big = boost::multiprecision::cpp_bin_float_50;
using boost::multiprecision::cpp_int;

// log10 of C(m,n) 2^n (1 - p^n)^C(m-n,h-1) at 50 significant digits.
double oracle_log10_bound(unsigned n, unsigned h, unsigned m, double p) {
  const auto binom = [](unsigned a, unsigned b) {
    cpp_int r = 1;
    for (unsigned i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  const Big base = Big(1) - boost::multiprecision::pow(Big(p), n);
  cpp_int e = binom(m - n, h - 1);
  Big power = 1, sq = base;
  for (; e > 0; e >>= 1) {
    if ((e & 1) != 0) power *= sq;
    sq *= sq;
  }
  return static_cast<double>(boost::multiprecision::log10(Big(binom(m, n)) * boost::multiprecision::pow(Big(2), n) * power));
}

}  // namespace

int main() {
  const std::string fixtures = ECHG_FIXTURES;

  criterion(1, "Two triples on 4 vertices: 1-e.c., max_ec 1", 1.0, [&](Checks& c) {
    const Hypergraph hg = read_hypergraph_file(fixtures + "/two_triples.hg");
    c.expect(hg == Hypergraph(3, 4, {{0, 1, 2}, {0, 2, 3}}), "fixture differs from {{0,1,2},{0,2,3}}");
    certify(c, "two_triples", hg, 1);
    c.expect(max_ec(hg).max_n == 1, "max_ec != 1");
  });

  criterion(2, "K3 box K3: max_ec 2, H-v and H[N(v)] 1-e.c.", 1.0, [&](Checks& c) {
    const Hypergraph hg = read_hypergraph_file(fixtures + "/k3k3.hg");
    c.expect(hg.uniformity() == 2 && hg.vertex_count() == 9 && hg.edge_count() == 18, "fixture shape");
    c.expect(max_ec(hg).max_n == 2, "max_ec != 2");
    certify(c, "k3k3", hg, 2);
    check_local_subgraphs(c, "k3k3", hg, false);
  });

  criterion(3, "H_L from complete MOLS(4): 80 edges, 2-e.c. family", 10.0, [&](Checks& c) {
    const auto b = build_from_mols(complete_mols(4));
    const Hypergraph& hg = b.graph;
    c.expect(hg.vertex_count() == 16, "vertices != 16");
    c.expect(hg.edge_count() == 80, "edges = " + std::to_string(hg.edge_count()));
    certify(c, "mols4", hg, 2);
    certify(c, "mols4 complement", complement(hg), 2);
    check_local_subgraphs(c, "mols4", hg, true);
  });

  criterion(4, "H_L from complete MOLS(5): 150 edges, 2-e.c.", 60.0, [&](Checks& c) {
    const auto b = build_from_mols(complete_mols(5));
    c.expect(b.graph.vertex_count() == 25, "vertices != 25");
    c.expect(b.graph.edge_count() == 150, "edges = " + std::to_string(b.graph.edge_count()));
    c.expect(b.raw_edges == b.unique_edges, "raw != unique");
    certify(c, "mols5", b.graph, 2);
  });

  criterion(5, "PG(2,q), q = 2,3,4: valid 2-designs, b and r match", 5.0, [&](Checks& c) {
    const std::uint32_t expected[3][3] = {{7, 3, 1}, {13, 4, 1}, {21, 5, 1}};
    for (std::uint32_t q = 2; q <= 4; ++q) {
      const Design d = projective_plane(q);
      const auto* e = expected[q - 2];
      const std::string at = "q=" + std::to_string(q);
      c.expect(d.t == 2 && d.v == e[0] && d.k == e[1] && d.lambda == e[2], at + ": parameters");
      c.expect(validate_design(d).valid, at + ": invalid");
      const auto p = design_params(d);
      c.expect(p.b_matches && p.b_formula == Rational(static_cast<std::int64_t>(d.block_count())), at + ": b");
      c.expect(p.r_matches, at + ": r");
    }
  });

  criterion(6, "H_{D,h} from PG(2,3) h=3 and PG(2,4) h=3,4: 2-e.c.", 120.0, [&](Checks& c) {
    const auto pg3 = build_from_design(projective_plane(3), 3);
    c.expect(pg3.graph.edge_count() == 52, "PG(3) edges = " + std::to_string(pg3.graph.edge_count()));
    certify(c, "pg3 h=3", pg3.graph, 2);
    for (std::uint32_t h : {3u, 4u}) certify(c, "pg4 h=" + std::to_string(h), build_from_design(projective_plane(4), h).graph, 2);
  });

  criterion(7, "Inversive plane q=5: 3-(26,6,1), H_{D,4} 3-e.c.", 180.0, [&](Checks& c) {
    const Design d = inversive_plane(5);
    c.expect(d.t == 3 && d.v == 26 && d.k == 6 && d.lambda == 1, "parameters");
    c.expect(d.block_count() == 130, "blocks = " + std::to_string(d.block_count()));
    c.expect(validate_design(d).valid, "invalid");
    const auto b = build_from_design(d, 4);
    c.expect(b.graph.edge_count() == 1950, "edges = " + std::to_string(b.graph.edge_count()));
    // Single-threaded run certifies; a 4-thread run must agree. The 180 s
    // limit covers both runs, so it bounds each of them.
    for (std::uint32_t n = 3; n >= 1; --n) certify(c, "inversive5 h=4", b.graph, n);
    c.expect(holds(b.graph, 3, 4), "4-thread run disagrees");
  });

  criterion(8, "Negative control: Fano h=3 is 1-e.c., not 2-e.c. (|T|=2)", 1.0, [&](Checks& c) {
    const auto b = build_from_design(fano(), 3);
    certify(c, "fano h=3", b.graph, 1);
    const auto r = is_nec(b.graph, 2);
    c.expect(!r.holds, "2-e.c. holds");
    c.expect(r.counterexample && r.counterexample->t.size() == 2, "counterexample T size != 2");
  });

  criterion(9, "Bounds hold on every certified instance", 1.0, [&](Checks& c) {
    c.expect(certified.size() >= 10, "only " + std::to_string(certified.size()) + " certified instances");
    for (const auto& inst : certified) {
      const auto& hg = inst.graph;
      c.expect(hg.edge_count() >= min_edges_bound(inst.n), inst.name + ": edge bound");
      c.expect(hg.vertex_count() >= min_vertices_bound(inst.n, hg.uniformity()), inst.name + ": vertex bound");
    }
    for (std::uint32_t n = 1; n <= 20; ++n)
      c.expect(min_vertices_bound(n, 2) == n + (std::uint64_t{1} << n), "h=2 bound at n=" + std::to_string(n));
  });

  criterion(10, "lambda_{i,j} formula equals block counts on Fano, PG(2,3)", 5.0, [&](Checks& c) {
    for (const Design& d : {fano(), projective_plane(3)}) {
      const std::string at = "v=" + std::to_string(d.v);
      for (std::uint32_t i = 0; i <= 2; ++i)
        for (std::uint32_t j = 0; i + j <= 2; ++j) {
          const Rational formula = lambda_ij(d, i, j);
          for_each_combination(d.v, i, [&](std::span<const std::uint32_t> is) {
            const std::set<Vertex> in(is.begin(), is.end());
            for_each_combination(d.v, j, [&](std::span<const std::uint32_t> js) {
              for (auto x : js)
                if (in.contains(x)) return;
              std::uint64_t count = 0;
              for (const auto& block : d.blocks) {
                const std::set<Vertex> bs(block.begin(), block.end());
                bool ok = true;
                for (auto x : is) ok = ok && bs.contains(x);
                for (auto x : js) ok = ok && !bs.contains(x);
                count += ok ? 1 : 0;
              }
              c.expect(formula == Rational(static_cast<std::int64_t>(count)),
                       at + " i=" + std::to_string(i) + " j=" + std::to_string(j));
            });
          });
        }
    }
  });

  criterion(11, "Random H_3(30, 1/2): 20/20 trials 2-e.c., bound < 1e-30", 300.0, [&](Checks& c) {
    const auto est = estimate_ec_fraction(RandomModel(3, 30, 0.5, 7), 2, 20);
    c.expect(est.fraction == 1.0, "fraction = " + std::to_string(est.fraction));
    const auto bound = union_bound(2, 3, 30, 0.5);
    c.expect(bound.log10_value < -30.0, "log10 bound = " + std::to_string(bound.log10_value));
    const double oracle = oracle_log10_bound(2, 3, 30, 0.5);
    const double rel = std::abs(bound.log10_value - oracle) / std::abs(oracle);
    c.expect(rel <= 1e-6, "relative error " + std::to_string(rel));
  });

  criterion(12, "Optimized and naive engines agree on 240 random instances", 120.0, [&](Checks& c) {
    std::mt19937_64 rng(20240612);
    int holds_count = 0, fails_count = 0;
    for (int trial = 0; trial < 240; ++trial) {
      const std::uint32_t h = 2 + trial % 2;
      const std::uint32_t n = 1 + (trial / 2) % 2;
      const std::uint32_t m = h + 1 + rng() % (8 - h);
      const double p = std::uniform_real_distribution<double>(0.2, 0.8)(rng);
      std::vector<VertexSet> edges;
      for_each_combination(m, h, [&](std::span<const std::uint32_t> e) {
        if (std::bernoulli_distribution(p)(rng)) edges.emplace_back(e.begin(), e.end());
      });
      const Hypergraph hg(h, m, edges);
      const auto fast = is_nec(hg, n);
      const auto naive = is_nec(hg, n, {.engine = Engine::kNaive});
      const std::string at = "trial " + std::to_string(trial);
      c.expect(fast.holds == naive.holds, at + ": verdicts differ");
      c.expect(fast.counterexample == naive.counterexample, at + ": counterexamples differ");
      (fast.holds ? holds_count : fails_count)++;
    }
    c.expect(holds_count > 0 && fails_count > 0, "sample lacks both outcomes");
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
