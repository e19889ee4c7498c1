// bcast: optimal broadcast domination solver, oracle, verifier, generator
// and benchmark harness.
//
// Exit codes: 0 success, 1 usage or parse error, 2 infeasible precondition
// (disconnected input, oracle size limit, failed verification), 3 internal
// invariant violation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bcast/anchored.hpp"
#include "bcast/bench_report.hpp"
#include "bcast/errors.hpp"
#include "bcast/generators.hpp"
#include "bcast/oracle.hpp"
#include "bcast/path_dag.hpp"
#include "bcast/peel.hpp"
#include "bcast/verify.hpp"

namespace {

using namespace bcast;

struct Options {
  std::string input = "-";
  std::string format = "edgelist";
  std::string out;
  std::string dump_dag;
  std::string broadcast_file;
  std::string checks = "dominating,efficient,path";
  std::string suite;
  std::string plot;
  std::string family;
  std::vector<int> sizes;
  std::uint64_t seed = 0;
  double p = -1;
  int reps = 5;
  int threads = 1;
  int oracle_limit = kDefaultOracleLimit;
  bool baseline = false;
  bool path_only = false;
  bool timing = false;
  bool no_prune = false;
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Graph load_graph(const Options& o) {
  if (o.format != "edgelist") throw parse_error("unsupported format: " + o.format);
  return parse_graph(read_all(o.input));
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.out);
  if (!out) throw parse_error("cannot write " + o.out);
  out << text;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void write_verdict(std::ostream& out, const Verdict& v) {
  out << "dominating: " << yes_no(v.dominating.dominating) << '\n';
  if (v.dominating.undominated) out << "undominated: " << *v.dominating.undominated << '\n';
  out << "efficient: " << yes_no(v.efficient.efficient) << '\n';
  if (v.efficient.overlap) out << "overlap: " << v.efficient.overlap->first << ',' << v.efficient.overlap->second << '\n';
  if (v.path_shape) {
    out << "path_shaped: " << yes_no(v.path_shape->path_shaped) << '\n';
    if (v.path_shape->offending) out << "offending: " << *v.path_shape->offending << '\n';
  } else {
    out << "path_shaped: n/a\n";
  }
}

using Clock = std::chrono::steady_clock;

void write_seconds(std::ostream& out, const Options& o, Clock::time_point t0) {
  if (o.timing) out << "seconds: " << std::chrono::duration<double>(Clock::now() - t0).count() << '\n';
}

int cmd_solve(const Options& o) {
  Graph g = load_graph(o);
  PeelOptions opts;
  opts.threads = o.threads;
  opts.prune = !o.no_prune;
  opts.routine = o.baseline ? PathRoutine::anchored : PathRoutine::anchor_free;
  auto t0 = Clock::now();
  auto sol = solve_optimal(g, opts);
  std::ostringstream out;
  out << "command: solve\n"
      << "routine: " << (o.baseline ? kAnchored : kAnchorFree) << '\n'
      << "n: " << g.n() << '\n'
      << "edges: " << g.edge_count() << '\n'
      << "cost: " << sol.cost() << '\n'
      << "assignment: " << format_assignment(sol.broadcast) << '\n';
  if (sol.peel)
    out << "peel: " << sol.peel->first << ':' << sol.peel->second << '\n';
  else
    out << "peel: radial\n";
  write_verdict(out, verify_all(apsp(g), sol.broadcast));
  // pruning counts depend on the parallel schedule
  if (o.threads <= 1)
    out << "candidates_connected: " << sol.stats.connected << '\n'
        << "candidates_pruned: " << sol.stats.pruned << '\n';
  write_seconds(out, o, t0);
  emit(o, out.str());
  return 0;
}

int cmd_path(const Options& o) {
  Graph g = load_graph(o);
  if (o.baseline && !o.dump_dag.empty()) throw CLI::ValidationError("--dump-dag", "not available with --baseline");
  DistanceMatrix dm = apsp(g, o.threads);
  if (!dm.connected()) throw disconnected_error();
  auto t0 = Clock::now();
  std::ostringstream out;
  out << "command: path\n"
      << "routine: " << (o.baseline ? kAnchored : kAnchorFree) << '\n'
      << "n: " << g.n() << '\n'
      << "edges: " << g.edge_count() << '\n';
  Broadcast f;
  if (o.baseline) {
    f = solve_path_anchored(g).broadcast;
    out << "cost: " << f.cost() << '\n' << "assignment: " << format_assignment(f) << '\n';
  } else {
    PathSolver solver({o.threads, false});
    auto sol = solver.solve(g, dm);
    f = sol.broadcast;
    out << "cost: " << f.cost() << '\n'
        << "assignment: " << format_assignment(f) << '\n'
        << "states: " << sol.stats.states << '\n'
        << "arcs: " << sol.stats.arcs << '\n';
    if (!o.dump_dag.empty()) {
      std::ofstream dot(o.dump_dag);
      if (!dot) throw parse_error("cannot write " + o.dump_dag);
      if (g.n() > 1) solver.dag().dump_dot(dot);
      else dot << "digraph states {\n}\n";
    }
  }
  write_verdict(out, verify_all(dm, f));
  write_seconds(out, o, t0);
  emit(o, out.str());
  return 0;
}

int cmd_oracle(const Options& o) {
  Graph g = load_graph(o);
  auto t0 = Clock::now();
  auto res = o.path_only ? oracle_gamma_path(g, o.oracle_limit) : oracle_gamma_b(g, o.oracle_limit);
  std::ostringstream out;
  out << "command: oracle\n"
      << "objective: " << (o.path_only ? "gamma_path" : "gamma_b") << '\n'
      << "n: " << g.n() << '\n'
      << "cost: " << res.cost << '\n'
      << "witness: " << format_assignment(res.witness) << '\n'
      << "explored: " << res.explored << '\n';
  write_seconds(out, o, t0);
  emit(o, out.str());
  return 0;
}

int cmd_verify(const Options& o) {
  Graph g = load_graph(o);
  if (o.broadcast_file.empty()) throw CLI::ValidationError("--broadcast", "required for verify");
  Broadcast f = parse_broadcast(read_all(o.broadcast_file));
  DistanceMatrix dm = apsp(g);
  for (auto& e : f.entries())
    if (e.vertex >= g.n()) throw parse_error("broadcast vertex " + std::to_string(e.vertex) + " out of range");
  bool want_dom = false, want_eff = false, want_path = false;
  std::stringstream list(o.checks);
  for (std::string item; std::getline(list, item, ',');) {
    if (item == "dominating") want_dom = true;
    else if (item == "efficient") want_eff = true;
    else if (item == "path") want_path = true;
    else throw CLI::ValidationError("--check", "unknown check '" + item + "'");
  }
  Verdict v = verify_all(dm, f);
  std::ostringstream out;
  out << "command: verify\n"
      << "n: " << g.n() << '\n'
      << "cost: " << f.cost() << '\n'
      << "assignment: " << format_assignment(f) << '\n';
  write_verdict(out, v);
  bool ok = (!want_dom || v.dominating.dominating) && (!want_eff || v.efficient.efficient) &&
            (!want_path || (v.path_shape && v.path_shape->path_shaped));
  out << "result: " << (ok ? "pass" : "fail") << '\n';
  emit(o, out.str());
  return ok ? 0 : 2;
}

int cmd_gen(const Options& o) {
  GeneratorSpec spec;
  spec.family = parse_family(o.family);
  if (o.sizes.size() != 1) throw CLI::ValidationError("--n", "gen takes exactly one size");
  spec.n = o.sizes.front();
  spec.seed = o.seed;
  if (o.p >= 0) spec.edge_probability = o.p;
  emit(o, render_graph(generate(spec)));
  return 0;
}

int cmd_bench(const Options& o) {
  SuiteConfig suite;
  if (!o.family.empty()) {
    if (o.sizes.empty()) throw CLI::ValidationError("--n", "bench --family needs at least one --n");
    auto family = parse_family(o.family);
    for (int n : o.sizes)
      suite.cases.push_back({family, n, o.seed, o.p >= 0 ? std::optional<double>(o.p) : std::nullopt});
  } else if (o.suite.empty() || o.suite == "default") {
    suite = default_suite();
  } else {
    suite = parse_suite(read_all(o.suite));
  }
  suite.reps = o.reps;
  auto report = run_bench(suite, o.threads, &std::cerr);
  std::cout << render_table(report);
  if (!o.out.empty()) {
    std::ofstream out(o.out);
    if (!out) throw parse_error("cannot write " + o.out);
    out << render_csv(report);
  }
  if (!o.plot.empty()) {
    std::ofstream out(o.plot);
    if (!out) throw parse_error("cannot write " + o.plot);
    out << render_speedup_csv(report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal broadcast domination on connected unweighted graphs"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", o.input, "Edge-list file, '-' for stdin")->capture_default_str();
    cmd->add_option("--format", o.format, "Input format")->check(CLI::IsMember({"edgelist"}))->capture_default_str();
    cmd->add_option("--out", o.out, "Write the report here instead of stdout");
  };
  auto threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1, 1024))->capture_default_str();
  };

  auto* solve = app.add_subcommand("solve", "Optimal broadcast domination");
  add_input(solve);
  threads(solve);
  solve->add_flag("--baseline", o.baseline, "Use the anchored path-case routine");
  solve->add_flag("--timing", o.timing, "Append wall-clock seconds");
  solve->add_flag("--no-prune", o.no_prune, "Disable incumbent pruning");

  auto* path = app.add_subcommand("path", "Minimum-cost path-shaped efficient broadcast");
  add_input(path);
  threads(path);
  path->add_flag("--baseline", o.baseline, "Use the anchored path-case routine");
  path->add_option("--dump-dag", o.dump_dag, "Write the state DAG in DOT format");
  path->add_flag("--timing", o.timing, "Append wall-clock seconds");

  auto* oracle = app.add_subcommand("oracle", "Brute-force optimum for small graphs");
  add_input(oracle);
  oracle->add_option("--oracle-limit", o.oracle_limit, "Largest accepted vertex count")
      ->check(CLI::Range(1, kMaxOracleLimit))
      ->capture_default_str();
  oracle->add_flag("--path", o.path_only, "Restrict to efficient path-shaped broadcasts");
  oracle->add_flag("--timing", o.timing, "Append wall-clock seconds");

  auto* verify = app.add_subcommand("verify", "Check a broadcast file against a graph");
  add_input(verify);
  verify->add_option("--broadcast", o.broadcast_file, "Broadcast file, lines 'vertex power'")->required();
  verify->add_option("--check", o.checks, "Comma list of dominating,efficient,path")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Generate a benchmark-family graph");
  gen->add_option("--family", o.family, "path|cycle|random-tree|sparse-random|barbell|star|wheel")->required();
  gen->add_option("--n", o.sizes, "Vertex count")->required();
  gen->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
  gen->add_option("--p", o.p, "Edge probability (sparse-random)");
  gen->add_option("--out", o.out, "Output file");

  auto* bench = app.add_subcommand("bench", "Anchor-free vs anchored end-to-end timing");
  bench->add_option("--suite", o.suite, "Suite file, or 'default'");
  bench->add_option("--family", o.family, "Single family instead of a suite");
  bench->add_option("--n", o.sizes, "Sizes for --family");
  bench->add_option("--seed", o.seed, "Seed for --family")->capture_default_str();
  bench->add_option("--p", o.p, "Edge probability (sparse-random)");
  bench->add_option("--reps", o.reps, "Repetitions per solver")->check(CLI::Range(1, 1000))->capture_default_str();
  bench->add_option("--out", o.out, "CSV report");
  bench->add_option("--plot", o.plot, "Speedup CSV for plotting");
  bench->add_flag("--baseline", o.baseline, "Accepted for symmetry; bench always runs both routines");
  threads(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*solve) return cmd_solve(o);
    if (*path) return cmd_path(o);
    if (*oracle) return cmd_oracle(o);
    if (*verify) return cmd_verify(o);
    if (*gen) return cmd_gen(o);
    if (*bench) return cmd_bench(o);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const disconnected_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const limit_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const invariant_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
