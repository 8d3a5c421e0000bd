// echg: construct, validate and check existentially closed uniform hypergraphs.
//
// Reports are line-oriented "key: value" text, or a single JSON object with
// --json. Exit codes: 0 success / property holds, 1 property fails / design
// invalid, 2 usage or input error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "echg/builders.hpp"
#include "echg/checker.hpp"
#include "echg/designs.hpp"
#include "echg/galois.hpp"
#include "echg/io.hpp"
#include "echg/random_model.hpp"

namespace {

using namespace echg;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Ordered key/value report. Vertex sets render as {a,b,c} in text and as
// arrays in JSON; other arrays render space-separated in text.
class Report {
 public:
  void add(const std::string& key, Json value) { entries_.emplace_back(key, std::move(value), false); }
  void add_set(const std::string& key, const VertexSet& s) { entries_.emplace_back(key, Json(s), true); }

  void print(std::ostream& out, bool json) const {
    if (json) {
      Json doc = Json::object();
      for (const auto& [key, value, is_set] : entries_) doc[key] = value;
      out << doc.dump(2) << '\n';
      return;
    }
    for (const auto& [key, value, is_set] : entries_) out << key << ": " << text(value, is_set) << '\n';
  }

 private:
  static std::string text(const Json& v, bool is_set) {
    if (is_set) return set_text(v.get<VertexSet>());
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + text(v[i], false);
      return out;
    }
    return v.dump();
  }

  std::vector<std::tuple<std::string, Json, bool>> entries_;
};

struct Common {
  bool json = false;
  bool no_timing = false;
};

// Writes `hg` to `path`, or to stdout when `path` is empty. Returns true if a
// file was written (the caller then prints its report to stdout).
bool emit_hypergraph(const Hypergraph& hg, const std::string& path, const std::vector<std::string>& comments) {
  if (path.empty()) {
    write_hypergraph(std::cout, hg, comments);
    return false;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  write_hypergraph(out, hg, comments);
  return true;
}

Engine parse_engine(const std::string& name) { return name == "naive" ? Engine::kNaive : Engine::kOptimized; }

void add_check_result(Report& r, const CheckResult& res, const Common& common) {
  if (res.counterexample) {
    r.add_set("counterexample_S", res.counterexample->s);
    r.add_set("counterexample_T", res.counterexample->t);
  }
  if (res.stats.too_few_vertices) r.add("too_few_vertices", true);
  r.add("candidates_examined", res.stats.candidates_examined);
  r.add("s_sets_examined", res.stats.s_sets_examined);
  if (!common.no_timing) r.add("elapsed_ms", res.stats.elapsed.count());
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string input;
  std::uint32_t n = 1;
  std::string engine = "optimized";
  unsigned threads = 1;
  bool witnesses = false;
};

int cmd_check(const CheckArgs& a, const Common& common) {
  const Hypergraph hg = read_hypergraph_file(a.input);
  const auto res = is_nec(hg, a.n, {parse_engine(a.engine), a.threads, a.witnesses});
  Report r;
  r.add("holds", res.holds);
  r.add("n", a.n);
  r.add("h", hg.uniformity());
  r.add("m", hg.vertex_count());
  r.add("edges", hg.edge_count());
  add_check_result(r, res, common);
  if (common.json && a.witnesses) {
    Json log = Json::array();
    for (const auto& w : res.witness_log) log.push_back({{"S", w.s}, {"T", w.t}, {"X", w.x}});
    r.add("witnesses", std::move(log));
  } else {
    for (const auto& w : res.witness_log)
      r.add("witness", "S=" + set_text(w.s) + " T=" + set_text(w.t) + " X=" + set_text(w.x));
  }
  r.print(std::cout, common.json);
  return res.holds ? kOk : kFails;
}

int cmd_maxec(const CheckArgs& a, const Common& common) {
  const Hypergraph hg = read_hypergraph_file(a.input);
  const auto res = max_ec(hg, {parse_engine(a.engine), a.threads, false});
  Report r;
  r.add("max_ec", res.max_n);
  r.add("h", hg.uniformity());
  r.add("m", hg.vertex_count());
  r.add("edges", hg.edge_count());
  r.add("failing_n", res.failure.n);
  add_check_result(r, res.failure, common);
  r.print(std::cout, common.json);
  return kOk;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  std::uint32_t q = 0;
  std::string out;
};

void require_prime_power(std::uint32_t q) {
  if (!prime_power(q)) throw UsageError("q=" + std::to_string(q) + " is not a prime power");
}

int cmd_construct(const ConstructArgs& a, const Common& common) {
  Report r;
  r.add("kind", a.kind);
  std::ostringstream artifact;
  if (a.kind == "mols") {
    require_prime_power(a.q);
    const MolsSet mols = complete_mols(a.q);
    for (std::size_t i = 0; i < mols.size(); ++i)
      for (std::size_t j = i + 1; j < mols.size(); ++j)
        if (!are_orthogonal(mols.squares()[i], mols.squares()[j]))
          throw std::logic_error("constructed squares are not orthogonal");
    write_mols(artifact, mols, {"complete MOLS of order " + std::to_string(a.q)});
    r.add("q", a.q);
    r.add("squares", mols.size());
  } else {
    Design d = fano();
    std::string label = "Fano plane";
    if (a.kind == "pg") {
      require_prime_power(a.q);
      d = projective_plane(a.q);
      label = "projective plane of order " + std::to_string(a.q);
    } else if (a.kind == "inversive") {
      require_prime_power(a.q);
      d = inversive_plane(a.q);
      label = "inversive plane of order " + std::to_string(a.q);
    }
    const auto v = validate_design(d);
    if (!v.valid) throw std::logic_error("constructed design failed validation");
    write_design(artifact, d, {label});
    r.add("t", d.t);
    r.add("v", d.v);
    r.add("k", d.k);
    r.add("lambda", d.lambda);
    r.add("blocks", d.block_count());
    r.add("valid", true);
  }

  if (a.out.empty()) {
    std::cout << artifact.str();
    return kOk;
  }
  std::ofstream out(a.out);
  if (!out) throw UsageError("cannot write '" + a.out + "'");
  out << artifact.str();
  r.add("out", a.out);
  r.print(std::cout, common.json);
  return kOk;
}

// ---------------------------------------------------------------------------

struct BuildArgs {
  std::string kind;
  std::optional<std::uint32_t> h;
  std::string input;
  std::string out;
};

int cmd_build(const BuildArgs& a, const Common& common) {
  const BuildResult b = [&] {
    if (a.kind == "from-mols") {
      const MolsSet mols = read_mols_file(a.input);
      if (a.h && *a.h + 1 != mols.order())
        throw UsageError("from-mols: h must be order - 1 = " + std::to_string(mols.order() - 1));
      return build_from_mols(mols);
    }
    if (!a.h) throw UsageError("from-design needs --h");
    return build_from_design(read_design_file(a.input), *a.h, a.input);
  }();

  Report r;
  r.add("h", b.graph.uniformity());
  r.add("m", b.graph.vertex_count());
  r.add("raw_edges", b.raw_edges);
  r.add("unique_edges", b.unique_edges);
  if (b.predicted_edges != 0) r.add("predicted_edges", b.predicted_edges);
  r.add("guaranteed_ec", b.guaranteed_ec);
  r.add("guarantee", b.guarantee_note);
  const std::vector<std::string> header = {
      b.provenance, "raw-edges: " + std::to_string(b.raw_edges) + " unique-edges: " + std::to_string(b.unique_edges)};
  if (emit_hypergraph(b.graph, a.out, header)) {
    r.add("out", a.out);
    r.print(std::cout, common.json);
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct RandomArgs {
  std::uint32_t h = 3;
  std::uint32_t m = 0;
  double p = 0.5;
  std::uint32_t n = 1;
  std::uint32_t trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

std::string scientific_from_log10(double log10_value) {
  const double exponent = std::floor(log10_value);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6fe%+.0f", std::pow(10.0, log10_value - exponent), exponent);
  return buf;
}

int cmd_random(const RandomArgs& a, const Common& common) {
  if (a.trials == 0) throw UsageError("trials must be at least 1");
  const RandomModel model(a.h, a.m, a.p, a.seed);
  const auto bound = union_bound(a.n, a.h, a.m, a.p);
  const auto est = estimate_ec_fraction(model, a.n, a.trials, a.threads);

  Report r;
  r.add("h", a.h);
  r.add("m", a.m);
  r.add("p", a.p);
  r.add("n", a.n);
  r.add("trials", a.trials);
  r.add("seed", a.seed);
  r.add("fraction", est.fraction);
  std::vector<int> verdicts(est.verdicts.begin(), est.verdicts.end());
  r.add("verdicts", verdicts);
  r.add("edge_counts", est.edge_counts);
  r.add("union_bound", scientific_from_log10(bound.log10_value));
  r.add("union_bound_log10", bound.log10_value);
  r.print(std::cout, common.json);
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& input, const Common& common) {
  const Design d = read_design_file(input);
  const auto v = validate_design(d);
  Report r;
  r.add("valid", v.valid);
  r.add("t", d.t);
  r.add("v", d.v);
  r.add("k", d.k);
  r.add("lambda", d.lambda);
  r.add("b", d.block_count());
  r.add("t_subsets", v.t_subsets);
  r.add("min_coverage", v.min_coverage);
  r.add("max_coverage", v.max_coverage);
  if (!v.valid) {
    r.add("deficient", v.deficient);
    r.add("excess", v.excess);
  }
  r.add("repeated_blocks", v.repeated_blocks);
  if (d.t == 2) {
    const auto params = design_params(d);
    r.add("b_formula", rational_text(params.b_formula));
    r.add("r", rational_text(params.r_formula));
    r.add("b_matches", params.b_matches);
    r.add("r_matches", params.r_matches);
  }
  for (std::uint32_t i = 0; i <= d.t; ++i)
    for (std::uint32_t j = 0; i + j <= d.t; ++j)
      r.add("lambda_" + std::to_string(i) + "_" + std::to_string(j), rational_text(lambda_ij(d, i, j)));
  r.print(std::cout, common.json);
  return v.valid ? kOk : kFails;
}

// ---------------------------------------------------------------------------

struct GraphOpArgs {
  std::string input;
  std::string out;
  std::vector<std::uint32_t> vertices;
  std::optional<std::uint32_t> neighbourhood;
  std::optional<std::uint32_t> anti_neighbourhood;
  std::uint32_t vertex = 0;
};

Vertex checked_vertex(const Hypergraph& hg, std::uint32_t v) {
  if (v >= hg.vertex_count()) throw UsageError("vertex " + std::to_string(v) + " out of range");
  return v;
}

int report_subgraph(const Subhypergraph& sub, const std::string& out, const std::string& what, const Common& common) {
  VertexSet original(sub.original.begin(), sub.original.end());
  if (emit_hypergraph(sub.graph, out, {what, "original-vertices: " + set_text(original)})) {
    Report r;
    r.add("h", sub.graph.uniformity());
    r.add("m", sub.graph.vertex_count());
    r.add("edges", sub.graph.edge_count());
    r.add_set("original_vertices", original);
    r.add("out", out);
    r.print(std::cout, common.json);
  }
  return kOk;
}

int cmd_complement(const GraphOpArgs& a, const Common& common) {
  const Hypergraph c = complement(read_hypergraph_file(a.input));
  if (emit_hypergraph(c, a.out, {"complement of " + a.input})) {
    Report r;
    r.add("h", c.uniformity());
    r.add("m", c.vertex_count());
    r.add("edges", c.edge_count());
    r.add("out", a.out);
    r.print(std::cout, common.json);
  }
  return kOk;
}

int cmd_induce(const GraphOpArgs& a, const Common& common) {
  const Hypergraph hg = read_hypergraph_file(a.input);
  VertexSet keep;
  std::string what;
  if (a.neighbourhood) {
    keep = hg.neighbourhood(checked_vertex(hg, *a.neighbourhood));
    what = "induced on N(" + std::to_string(*a.neighbourhood) + ")";
  } else if (a.anti_neighbourhood) {
    keep = hg.anti_neighbourhood(checked_vertex(hg, *a.anti_neighbourhood));
    what = "induced on A(" + std::to_string(*a.anti_neighbourhood) + ")";
  } else {
    if (a.vertices.empty()) throw UsageError("induce needs --vertices, --neighbourhood or --anti-neighbourhood");
    for (auto v : a.vertices) keep.push_back(checked_vertex(hg, v));
    what = "induced on a vertex list";
  }
  return report_subgraph(induced(hg, keep), a.out, what + " of " + a.input, common);
}

int cmd_delete_vertex(const GraphOpArgs& a, const Common& common) {
  const Hypergraph hg = read_hypergraph_file(a.input);
  const Vertex v = checked_vertex(hg, a.vertex);
  return report_subgraph(delete_vertex(hg, v), a.out, "vertex " + std::to_string(v) + " deleted from " + a.input,
                         common);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, validate and check existentially closed uniform hypergraphs"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--json", common.json, "Emit one JSON document instead of key: value lines");
  app.add_flag("--no-timing", common.no_timing, "Omit elapsed_ms so repeated runs are byte-identical");

  const auto engine_check = CLI::IsMember({"optimized", "naive"});
  const auto add_check_flags = [&](CLI::App* sub, CheckArgs& a) {
    sub->add_option("input", a.input, "Hypergraph file")->required()->check(CLI::ExistingFile);
    sub->add_option("--engine", a.engine, "optimized or naive")->check(engine_check);
    sub->add_option("--threads", a.threads, "Worker threads (default 1)")->check(CLI::Range(1u, 1024u));
  };

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Decide whether a hypergraph is n-e.c.");
  add_check_flags(check, check_args);
  check->add_option("-n,--n", check_args.n, "n")->required()->check(CLI::Range(1u, 63u));
  check->add_flag("--witnesses", check_args.witnesses, "List the first witness X for every (S, T)");

  CheckArgs maxec_args;
  auto* maxec = app.add_subcommand("maxec", "Largest n for which a hypergraph is n-e.c.");
  add_check_flags(maxec, maxec_args);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Write a complete MOLS family or a design");
  construct->add_option("kind", construct_args.kind, "mols, pg, inversive or fano")
      ->required()
      ->check(CLI::IsMember({"mols", "pg", "inversive", "fano"}));
  construct->add_option("-q,--q", construct_args.q, "Prime power order");
  construct->add_option("-o,--out", construct_args.out, "Output file (stdout if omitted)");

  BuildArgs build_args;
  auto* build = app.add_subcommand("build", "Build a hypergraph from MOLS or a design");
  build->add_option("kind", build_args.kind, "from-mols or from-design")
      ->required()
      ->check(CLI::IsMember({"from-mols", "from-design"}));
  build->add_option("--h", build_args.h, "Uniformity");
  build->add_option("-i,--in", build_args.input, "Input MOLS or design file")->required()->check(CLI::ExistingFile);
  build->add_option("-o,--out", build_args.out, "Output hypergraph file (stdout if omitted)");

  RandomArgs random_args;
  auto* random = app.add_subcommand("random", "Estimate the n-e.c. fraction of H_h(m, p)");
  random->add_option("--h", random_args.h, "Uniformity")->required();
  random->add_option("--m", random_args.m, "Vertices")->required();
  random->add_option("--p", random_args.p, "Edge probability in (0, 1)")->required();
  random->add_option("-n,--n", random_args.n, "n")->required()->check(CLI::Range(1u, 63u));
  random->add_option("--trials", random_args.trials, "Number of samples")->required();
  random->add_option("--seed", random_args.seed, "Base seed")->required();
  random->add_option("--threads", random_args.threads, "Worker threads (default 1)")->check(CLI::Range(1u, 1024u));

  std::string validate_input;
  auto* validate = app.add_subcommand("validate", "Check a t-design and print its parameters");
  validate->add_option("input", validate_input, "Design file")->required()->check(CLI::ExistingFile);

  GraphOpArgs complement_args, induce_args, delete_args;
  auto* comp = app.add_subcommand("complement", "Write the complement hypergraph");
  comp->add_option("input", complement_args.input, "Hypergraph file")->required()->check(CLI::ExistingFile);
  comp->add_option("-o,--out", complement_args.out, "Output file (stdout if omitted)");

  auto* induce = app.add_subcommand("induce", "Write an induced subhypergraph");
  induce->add_option("input", induce_args.input, "Hypergraph file")->required()->check(CLI::ExistingFile);
  induce->add_option("-o,--out", induce_args.out, "Output file (stdout if omitted)");
  auto* by_list = induce->add_option("--vertices", induce_args.vertices, "Vertex list")->delimiter(',');
  auto* by_n = induce->add_option("--neighbourhood", induce_args.neighbourhood, "Induce on N(v)");
  auto* by_a = induce->add_option("--anti-neighbourhood", induce_args.anti_neighbourhood, "Induce on A(v)");
  by_list->excludes(by_n)->excludes(by_a);
  by_n->excludes(by_a);

  auto* del = app.add_subcommand("delete-vertex", "Write H - v");
  del->add_option("input", delete_args.input, "Hypergraph file")->required()->check(CLI::ExistingFile);
  del->add_option("--vertex", delete_args.vertex, "Vertex to delete")->required();
  del->add_option("-o,--out", delete_args.out, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(check_args, common);
    if (maxec->parsed()) return cmd_maxec(maxec_args, common);
    if (construct->parsed()) return cmd_construct(construct_args, common);
    if (build->parsed()) return cmd_build(build_args, common);
    if (random->parsed()) return cmd_random(random_args, common);
    if (validate->parsed()) return cmd_validate(validate_input, common);
    if (comp->parsed()) return cmd_complement(complement_args, common);
    if (induce->parsed()) return cmd_induce(induce_args, common);
    if (del->parsed()) return cmd_delete_vertex(delete_args, common);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
