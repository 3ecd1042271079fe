#include "balforest/tools/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "balforest/bounds.hpp"
#include "balforest/errors.hpp"
#include "balforest/generators.hpp"
#include "balforest/io.hpp"
#include "balforest/oracle.hpp"
#include "balforest/solver.hpp"
#include "balforest/tools/bench.hpp"
#include "balforest/tools/verify.hpp"

namespace balforest::tools {
namespace {

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw InvalidInput("");
    } catch (const std::exception&) {
      throw InvalidInput("bad vertex '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

/// Inline JSON when it starts with '{', otherwise a file holding JSON.
nlohmann::json load_json_argument(const std::string& text) {
  try {
    if (!text.empty() && text.front() == '{') return nlohmann::json::parse(text);
    std::ifstream in(text);
    if (!in) throw InvalidInput("cannot open '" + text + "'");
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad JSON: ") + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << text;
}

nlohmann::json solve_to_json(const SolveResult& r, const Forest& forest, const ColouredCompleteGraph& g) {
  return {
      {"n", g.n()},
      {"max_degree", forest.max_degree()},
      {"edges", forest.edge_count()},
      {"balanced", is_balanced(g)},
      {"sum", r.embedding.sum()},
      {"achieved", r.achieved},
      {"certificate", std::string(to_string(r.certificate))},
      {"certified_bound", r.certified_value ? nlohmann::json(*r.certified_value) : nlohmann::json(nullptr)},
      {"within_theorem", r.within_theorem},
      {"theorem_bound", to_json(r.theorem_bound)},
      {"stats", {{"restarts", r.stats.restarts}, {"samples", r.stats.samples},
                 {"local_search_moves", r.stats.local_search_moves}}},
      {"embedding", io::embedding_to_json(r.embedding)},
  };
}

struct SolveArgs {
  std::string colouring;
  std::string forest;
  std::uint64_t seed = 0;
  std::string strategy = "auto";
  std::string json_out;
  std::string trace_out;
  SolverConfig cfg;
  std::string epsilon;
};

struct GenColouringArgs {
  std::string kind;
  int n = 0;
  std::uint64_t seed = 0;
  std::string epsilon = "1/10";
  std::string d;
  std::string out;
};

struct GenForestArgs {
  std::string kind;
  int n = 0;
  int max_degree = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct OracleArgs {
  std::string colouring;
  std::string forest;
  std::string partial;
  std::string mode = "min";
  std::int64_t budget = kDefaultOracleBudget;
  bool budget_given = false;
  std::string set_l;
  std::string set_u;
  bool minimal = false;
};

struct BoundsArgs {
  int n = 0;
  int delta = 0;
  std::string eta;
};

struct VerifyArgs {
  std::string suite;
  std::vector<int> sizes;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct BenchArgs {
  std::vector<int> sizes{16, 32, 48, 64};
  std::vector<std::string> families{"path", "star", "random"};
  int seeds = 1;
  std::uint64_t seed = 0;
  int threads = 1;
  bool timing = false;
  std::string out;
};

int run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const auto g = io::load_colouring(a.colouring);
  const auto forest = io::load_forest(a.forest);
  SolverConfig cfg = a.cfg;
  cfg.seed = a.seed;
  cfg.strategy = parse_strategy(a.strategy);
  if (!a.epsilon.empty()) cfg.fixed_epsilon = Rational::parse(a.epsilon).to_double();
  const SolveResult result = solve(forest, g, cfg);
  const auto report = solve_to_json(result, forest, g);
  out << report.dump(2) << '\n';
  if (!a.json_out.empty()) write_text_file(a.json_out, report.dump(2) + "\n");
  if (!a.trace_out.empty()) {
    std::ofstream trace(a.trace_out);
    if (!trace) throw InvalidInput("cannot write '" + a.trace_out + "'");
    if (result.trace) write_trace_json_lines(trace, *result.trace);
  }
  if (is_balanced(g) && !result.within_theorem) {
    err << "BOUND VIOLATION: balanced input, achieved " << result.achieved << " > theorem bound "
        << result.theorem_bound.theorem3 << '\n';
    return kBoundViolation;
  }
  return kSuccess;
}

int run_gen_colouring(const GenColouringArgs& a, std::ostream& out) {
  std::optional<ColouredCompleteGraph> g;
  if (a.kind == "random") {
    g = random_balanced_colouring(a.n, a.seed);
  } else if (a.kind == "c0") {
    g = c0_colouring(a.n);
  } else if (a.kind == "perturbed") {
    std::optional<Rational> d;
    if (!a.d.empty()) d = Rational::parse(a.d);
    g = perturbed_colouring(make_perturbed_params(a.n, Rational::parse(a.epsilon), d));
  } else {
    throw InvalidInput("unknown colouring kind '" + a.kind + "'");
  }
  io::save_colouring(a.out, *g);
  out << nlohmann::json{{"n", g->n()}, {"red_edges", g->red_edge_count()}, {"balanced", is_balanced(*g)},
                        {"out", a.out}}.dump()
      << '\n';
  return kSuccess;
}

int run_gen_forest(const GenForestArgs& a, std::ostream& out) {
  const Forest forest = make_forest({parse_forest_kind(a.kind), a.n, a.max_degree, a.seed});
  io::save_forest(a.out, forest);
  out << nlohmann::json{{"n", forest.n()}, {"edges", forest.edge_count()}, {"max_degree", forest.max_degree()},
                        {"min_degree", forest.min_degree()}, {"out", a.out}}.dump()
      << '\n';
  return kSuccess;
}

nlohmann::json verdict_to_json(const SignVerdict& v) {
  return {{"kind", std::string(to_string(v.kind))}, {"min_sum", v.min_sum}, {"max_sum", v.max_sum},
          {"min_witness", io::embedding_to_json(v.min_witness)},
          {"max_witness", io::embedding_to_json(v.max_witness)}};
}

int run_oracle(const OracleArgs& a, std::ostream& out) {
  const auto g = io::load_colouring(a.colouring);
  const auto forest = io::load_forest(a.forest);
  nlohmann::json report{{"mode", a.mode}};
  if (a.mode == "min") {
    bool allow_large = false;
    if (a.budget_given) {
      std::int64_t count = 1;
      for (int k = 2; k <= g.n() && count <= a.budget; ++k) count *= k;
      allow_large = count <= a.budget;
    }
    const auto exact = exact_min_imbalance(forest, g, allow_large);
    report["value"] = exact.value;
    report["witness"] = io::embedding_to_json(exact.witness);
  } else if (a.mode == "sign") {
    const PartialEmbedding p = a.partial.empty() ? PartialEmbedding(forest.n(), g.n())
                                                 : io::partial_from_json(load_json_argument(a.partial), g.n());
    report["verdict"] = verdict_to_json(exact_sign(forest, g, p, a.budget));
  } else if (a.mode == "sign-fixing") {
    const auto l = parse_vertex_list(a.set_l);
    std::vector<Vertex> u = parse_vertex_list(a.set_u);
    if (a.set_u.empty()) {
      for (Vertex x = 0; x < g.n(); ++x) u.push_back(x);
    }
    const auto result = is_sign_fixing(forest, g, l, u, a.budget);
    report["sign_fixing"] = result.sign_fixing;
    if (result.witness) report["witness"] = io::partial_to_json(*result.witness);
    if (result.negative) report["negative"] = io::embedding_to_json(*result.negative);
    if (result.positive) report["positive"] = io::embedding_to_json(*result.positive);
    if (a.minimal && result.sign_fixing) {
      const auto minimal = minimal_sign_fixing_subset(forest, g, l, u, a.budget);
      report["minimal"] = {{"M", minimal.m}, {"N", minimal.n}};
    }
  } else {
    throw InvalidInput("unknown oracle mode '" + a.mode + "'");
  }
  out << report.dump(2) << '\n';
  return kSuccess;
}

int run_bounds(const BoundsArgs& a, std::ostream& out) {
  std::optional<double> eta;
  if (!a.eta.empty()) eta = Rational::parse(a.eta).to_double();
  out << to_json(make_bound_report(a.n, a.delta, eta)).dump(2) << '\n';
  return kSuccess;
}

int run_verify_command(const VerifyArgs& a, std::ostream& out) {
  VerifySuiteSpec spec{parse_verify_suite(a.suite), a.sizes, a.trials, a.seed};
  const VerifyReport report = run_verify(spec);
  const std::string text = report.to_json().dump(2) + "\n";
  out << text;
  if (!a.out.empty()) write_text_file(a.out, text);
  return report.passed() ? kSuccess : kBoundViolation;
}

int run_bench_command(const BenchArgs& a, std::ostream& out) {
  BenchGrid grid;
  grid.sizes = a.sizes;
  grid.families.clear();
  for (const auto& f : a.families) grid.families.push_back(parse_forest_kind(f));
  grid.seeds_per_cell = a.seeds;
  grid.seed = a.seed;
  grid.threads = a.threads;
  grid.timing = a.timing;
  const auto rows = run_bench(grid);
  if (a.out.empty()) {
    write_bench_csv(out, rows);
  } else {
    std::ofstream file(a.out);
    if (!file) throw InvalidInput("cannot write '" + a.out + "'");
    write_bench_csv(file, rows);
  }
  return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Low-imbalance embeddings of forests in two-coloured complete graphs", "balforest"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Find an embedding of a forest with small colour sum");
  solve_cmd->add_option("--colouring", solve_args.colouring, "Colouring file")->required();
  solve_cmd->add_option("--forest", solve_args.forest, "Forest file")->required();
  solve_cmd->add_option("--seed", solve_args.seed, "Random seed");
  solve_cmd->add_option("--strategy", solve_args.strategy, "auto|interpolate-only|greedy-star|local-search");
  solve_cmd->add_option("--json", solve_args.json_out, "Also write the JSON result here");
  solve_cmd->add_option("--trace", solve_args.trace_out, "Write the interpolation trace as JSON lines");
  solve_cmd->add_option("--max-restarts", solve_args.cfg.max_restarts, "Anchor restarts");
  solve_cmd->add_option("--sample-budget", solve_args.cfg.sample_budget, "Samples per sign search");
  solve_cmd->add_option("--exact-threshold", solve_args.cfg.exact_threshold, "Solve exactly up to this n");
  solve_cmd->add_option("--epsilon", solve_args.epsilon, "Fixed eps (p/q) instead of the optimised one");

  GenColouringArgs gc;
  auto* gc_cmd = app.add_subcommand("gen-colouring", "Generate a colouring of K_n");
  gc_cmd->add_option("--kind", gc.kind, "random|c0|perturbed")->required();
  gc_cmd->add_option("--n", gc.n, "Number of vertices")->required();
  gc_cmd->add_option("--seed", gc.seed, "Random seed");
  gc_cmd->add_option("--epsilon", gc.epsilon, "Perturbation size p/q");
  gc_cmd->add_option("--d", gc.d, "Cross density x/y");
  gc_cmd->add_option("--out", gc.out, "Output file")->required();

  GenForestArgs gf;
  auto* gf_cmd = app.add_subcommand("gen-forest", "Generate a forest");
  gf_cmd->add_option("--kind", gf.kind, "star|path|random|broom")->required();
  gf_cmd->add_option("--n", gf.n, "Number of vertices")->required();
  gf_cmd->add_option("--max-degree", gf.max_degree, "Degree cap (random) or centre degree (broom)");
  gf_cmd->add_option("--seed", gf.seed, "Random seed");
  gf_cmd->add_option("--out", gf.out, "Output file")->required();

  OracleArgs oa;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive answers for small instances");
  oracle_cmd->add_option("--colouring", oa.colouring, "Colouring file")->required();
  oracle_cmd->add_option("--forest", oa.forest, "Forest file")->required();
  oracle_cmd->add_option("--partial", oa.partial, "Partial embedding: inline JSON or a file");
  oracle_cmd->add_option("--mode", oa.mode, "min|sign|sign-fixing");
  auto* budget_opt = oracle_cmd->add_option("--budget", oa.budget, "Maximum number of extensions to enumerate");
  oracle_cmd->add_option("--set-l", oa.set_l, "Comma-separated forest vertices (sign-fixing)");
  oracle_cmd->add_option("--set-u", oa.set_u, "Comma-separated host vertices (sign-fixing; default all)");
  oracle_cmd->add_flag("--minimal", oa.minimal, "Also report a minimal sign-fixing subset");

  BoundsArgs ba;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate the bound formulas");
  bounds_cmd->add_option("--n", ba.n, "Number of vertices")->required();
  bounds_cmd->add_option("--delta", ba.delta, "Maximum degree")->required();
  bounds_cmd->add_option("--eta", ba.eta, "eta as p/q for the asymptotic bound");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite and print a JSON report");
  verify_cmd->add_option("--suite", va.suite, "Suite name")->required();
  verify_cmd->add_option("--n", va.sizes, "Instance sizes")->delimiter(',');
  verify_cmd->add_option("--trials", va.trials, "Trials per size");
  verify_cmd->add_option("--seed", va.seed, "Random seed");
  verify_cmd->add_option("--out", va.out, "Also write the report here");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Solve a grid of instances and print CSV");
  bench_cmd->add_option("--n", bench_args.sizes, "Instance sizes")->delimiter(',');
  bench_cmd->add_option("--families", bench_args.families, "Forest families")->delimiter(',');
  bench_cmd->add_option("--seeds", bench_args.seeds, "Seeds per cell");
  bench_cmd->add_option("--seed", bench_args.seed, "First seed");
  bench_cmd->add_option("--threads", bench_args.threads, "Worker threads");
  bench_cmd->add_flag("--timing", bench_args.timing, "Fill the millis column");
  bench_cmd->add_option("--out", bench_args.out, "Output CSV file");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args, out, err);
    if (*gc_cmd) return run_gen_colouring(gc, out);
    if (*gf_cmd) return run_gen_forest(gf, out);
    if (*oracle_cmd) {
      oa.budget_given = budget_opt->count() > 0;
      return run_oracle(oa, out);
    }
    if (*bounds_cmd) return run_bounds(ba, out);
    if (*verify_cmd) return run_verify_command(va, out);
    if (*bench_cmd) return run_bench_command(bench_args, out);
  } catch (const OracleRefusal& e) {
    err << "oracle refused: " << e.what() << '\n';
    return kOracleRefusal;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace balforest::tools
