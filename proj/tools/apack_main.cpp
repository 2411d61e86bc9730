// apack — anticomplete (A,B)-path packings, separators, and the hard
// instance family, as a command-line tool around the library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "apack/counterexample.hpp"
#include "apack/flow.hpp"
#include "apack/generators.hpp"
#include "apack/io.hpp"
#include "apack/minorfree.hpp"
#include "apack/oracle.hpp"
#include "apack/sparsify.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

struct OutputConfig {
  std::string format = "json";
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputConfig& cfg) {
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", cfg.out_path, "write output to this file instead of stdout");
}

void write_output(const OutputConfig& cfg, const std::string& payload) {
  if (cfg.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw apack::input_error("cannot open '" + cfg.out_path + "' for writing");
  out << payload;
}

ordered_json paths_json(const std::vector<std::vector<int>>& paths) {
  ordered_json arr = ordered_json::array();
  for (const auto& path : paths) arr.push_back(path);
  return arr;
}

ordered_json sparsify_report_json(const apack::SparsifyReport& report) {
  ordered_json rounds = ordered_json::array();
  for (const auto& r : report.rounds)
    rounds.push_back({{"flow_before", r.flow_before},
                      {"flow_after", r.flow_after},
                      {"max_degree", r.max_degree},
                      {"independent_size", r.independent_size}});
  return {{"delta_used", report.delta_used},
          {"delta_post_gadget", true},
          {"guarantee", report.guarantee},
          {"rounds", rounds}};
}

ordered_json minorfree_report_json(const apack::MinorFreeReport& report) {
  return {{"t", report.t},
          {"avg_degree", report.avg_degree},
          {"is_size", report.is_size},
          {"certified_bound", report.certified_bound}};
}

std::string render_paths_text(const std::vector<std::vector<int>>& paths) {
  std::ostringstream out;
  for (size_t i = 0; i < paths.size(); ++i) {
    out << "  path " << i << ":";
    for (int v : paths[i]) out << " " << v;
    out << "\n";
  }
  return out.str();
}

std::string render_set_text(const apack::VertexSet& set) {
  std::ostringstream out;
  for (size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set[i];
  return out.str();
}

int run_flow(const std::string& file, const OutputConfig& cfg) {
  apack::TerminalInstance inst = apack::load_instance(file);
  apack::PathSystem system = apack::max_disjoint_paths(inst.graph, inst.a, inst.b);
  apack::SeparatorCertificate sep = apack::min_separator(inst.graph, inst.a, inst.b);
  if (cfg.format == "json") {
    ordered_json j{{"schema", 1},
                   {"subcommand", "flow"},
                   {"n", inst.graph.vertex_count()},
                   {"flow", system.paths.size()},
                   {"vertex_disjoint", system.vertex_disjoint},
                   {"pairwise_anticomplete", system.pairwise_anticomplete},
                   {"paths", paths_json(system.paths)},
                   {"separator", sep.vertices}};
    write_output(cfg, j.dump() + "\n");
  } else {
    std::ostringstream out;
    out << "n " << inst.graph.vertex_count() << "  flow " << system.paths.size() << "\n"
        << render_paths_text(system.paths) << "separator: " << render_set_text(sep.vertices)
        << "\n";
    write_output(cfg, out.str());
  }
  return 0;
}

int run_solve(const std::string& file, const std::string& solver, std::optional<int> requested_k,
              const OutputConfig& cfg) {
  apack::TerminalInstance inst = apack::load_instance(file);
  const int flow = apack::flow_value(inst.graph, inst.a, inst.b);

  std::optional<apack::BoundedDegreeSolution> bounded;
  std::optional<apack::MinorFreeSolution> minorfree;
  if (solver == "bounded-degree" || solver == "both")
    bounded = apack::solve_bounded_degree(inst.graph, inst.a, inst.b);
  if (solver == "minor-free" || solver == "both")
    minorfree = apack::solve_minor_free(inst.graph, inst.a, inst.b);

  int achieved = 0;
  if (bounded) achieved = std::max(achieved, static_cast<int>(bounded->paths.paths.size()));
  if (minorfree) achieved = std::max(achieved, static_cast<int>(minorfree->paths.paths.size()));
  const bool include_separator = flow == 0 || (requested_k && achieved < *requested_k);
  std::optional<apack::SeparatorCertificate> separator;
  if (include_separator) separator = apack::min_separator(inst.graph, inst.a, inst.b);

  if (cfg.format == "json") {
    ordered_json j{{"schema", 1},
                   {"subcommand", "solve"},
                   {"solver", solver},
                   {"n", inst.graph.vertex_count()},
                   {"flow", flow}};
    j["requested_k"] = requested_k ? ordered_json(*requested_k) : ordered_json(nullptr);
    if (bounded) {
      ordered_json section{{"count", bounded->paths.paths.size()},
                           {"paths", paths_json(bounded->paths.paths)},
                           {"report", sparsify_report_json(bounded->report)}};
      j["bounded_degree"] = section;
    }
    if (minorfree) {
      ordered_json section{{"count", minorfree->paths.paths.size()},
                           {"paths", paths_json(minorfree->paths.paths)},
                           {"report", minorfree_report_json(minorfree->report)}};
      j["minor_free"] = section;
    }
    if (separator) j["separator"] = separator->vertices;
    write_output(cfg, j.dump() + "\n");
  } else {
    std::ostringstream out;
    out << "n " << inst.graph.vertex_count() << "  flow " << flow << "\n";
    if (bounded)
      out << "bounded-degree: " << bounded->paths.paths.size() << " paths (guarantee "
          << bounded->report.guarantee << ", delta " << bounded->report.delta_used << ")\n"
          << render_paths_text(bounded->paths.paths);
    if (minorfree)
      out << "minor-free: " << minorfree->paths.paths.size() << " paths (certified bound "
          << minorfree->report.certified_bound << ", conflict avg degree "
          << minorfree->report.avg_degree << ")\n"
          << render_paths_text(minorfree->paths.paths);
    if (separator) out << "separator: " << render_set_text(separator->vertices) << "\n";
    write_output(cfg, out.str());
  }
  return 0;
}

int run_sparsify(const std::string& file, const OutputConfig& cfg) {
  apack::TerminalInstance inst = apack::load_instance(file);
  apack::SparsifyResult result = apack::sparsify_full(inst.graph, inst.a, inst.b);
  apack::InducedSubgraph sub = apack::induced_subgraph(inst.graph, result.kept);
  if (cfg.format == "json") {
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : sub.graph.edges()) edges.push_back({u, v});
    ordered_json j{{"schema", 1},
                   {"subcommand", "sparsify"},
                   {"kept", result.kept},
                   {"report", sparsify_report_json(result.report)},
                   {"subgraph", {{"n", sub.graph.vertex_count()}, {"edges", edges}}}};
    write_output(cfg, j.dump() + "\n");
  } else {
    std::ostringstream out;
    out << "kept " << result.kept.size() << " of " << inst.graph.vertex_count()
        << " vertices; flow " << result.report.initial_flow() << " -> "
        << result.report.final_flow() << " over " << result.report.rounds.size()
        << " rounds (delta " << result.report.delta_used << ", guarantee "
        << result.report.guarantee << ")\n"
        << "kept: " << render_set_text(result.kept) << "\n";
    write_output(cfg, out.str());
  }
  return 0;
}

int run_gen_counterexample(int k, int g, const OutputConfig& cfg) {
  apack::CounterexampleInstance inst = apack::generate_counterexample(k, g);
  write_output(cfg, apack::emit_instance({inst.graph, inst.a, inst.b}));
  return 0;
}

// Recognize a generated instance from its file form: k is |A|, p follows
// from the vertex count, and the graph must match the construction exactly.
apack::CounterexampleInstance infer_counterexample(const apack::TerminalInstance& inst) {
  const int k = static_cast<int>(inst.a.size());
  const int n = inst.graph.vertex_count();
  if (k < 1 || n == 0 || n % k != 0)
    throw apack::input_error("not a generated counterexample instance (bad shape)");
  const int cols = n / k;
  if ((cols - 1) % k != 0) throw apack::input_error("not a generated counterexample instance (bad shape)");
  const int p = (cols - 1) / k;
  if (p < 2) throw apack::input_error("not a generated counterexample instance (bad shape)");
  apack::CounterexampleInstance expected = apack::generate_counterexample(k, 2 * p);
  if (expected.graph != inst.graph || expected.a != inst.a || expected.b != inst.b)
    throw apack::input_error("file does not match the counterexample construction");
  return expected;
}

int run_verify(const std::string& file, int oracle_cap, const OutputConfig& cfg) {
  apack::TerminalInstance parsed = apack::load_instance(file);
  apack::CounterexampleInstance inst = infer_counterexample(parsed);
  apack::CounterexampleVerification report = apack::verify_counterexample(inst, oracle_cap);
  if (cfg.format == "json") {
    ordered_json j{{"schema", 1},
                   {"subcommand", "verify"},
                   {"k", inst.k},
                   {"p", inst.p},
                   {"n", inst.graph.vertex_count()},
                   {"flow", report.flow},
                   {"flow_ok", report.flow_ok},
                   {"girth", report.girth_value ? ordered_json(*report.girth_value) : ordered_json(nullptr)},
                   {"girth_ok", report.girth_ok},
                   {"degeneracy", report.degeneracy_value ? ordered_json(*report.degeneracy_value) : ordered_json(nullptr)},
                   {"degeneracy_ok", report.degeneracy_ok},
                   {"packing", report.packing ? ordered_json(*report.packing) : ordered_json(nullptr)},
                   {"packing_ok", report.packing_ok},
                   {"path_neighborhood_separators_ok", report.path_neighborhood_separators_ok},
                   {"failures", report.failures},
                   {"ok", report.ok()}};
    write_output(cfg, j.dump() + "\n");
  } else {
    std::ostringstream out;
    out << "k " << inst.k << "  p " << inst.p << "  n " << inst.graph.vertex_count() << "\n"
        << "flow " << report.flow << (report.flow_ok ? " ok" : " FAIL") << "\n";
    if (report.girth_value) out << "girth " << *report.girth_value << (report.girth_ok ? " ok" : " FAIL") << "\n";
    if (report.degeneracy_value)
      out << "degeneracy " << *report.degeneracy_value << (report.degeneracy_ok ? " ok" : " FAIL") << "\n";
    if (report.packing) out << "packing " << *report.packing << (report.packing_ok ? " ok" : " FAIL") << "\n";
    out << "neighborhood separators " << (report.path_neighborhood_separators_ok ? "ok" : "FAIL") << "\n"
        << (report.ok() ? "all checks passed" : "verification FAILED") << "\n";
    write_output(cfg, out.str());
  }
  return report.ok() ? 0 : 3;
}

int run_oracle(const std::string& file, int oracle_cap, long long max_paths,
               const OutputConfig& cfg) {
  apack::TerminalInstance inst = apack::load_instance(file);
  apack::OracleBudget budget;
  budget.max_vertices = oracle_cap;
  budget.max_paths_enumerated = max_paths;
  int packing = apack::max_anticomplete_packing(inst.graph, inst.a, inst.b, budget);
  if (cfg.format == "json") {
    ordered_json j{{"schema", 1}, {"subcommand", "oracle"}, {"packing", packing}};
    write_output(cfg, j.dump() + "\n");
  } else {
    write_output(cfg, "packing " + std::to_string(packing) + "\n");
  }
  return 0;
}

int run_bench(std::uint32_t seed, int count, const OutputConfig& cfg) {
  std::ostringstream csv;
  csv << "delta,k,n,flow,achieved,ratio\n";
  const int terminals = 4;
  for (int delta = 2; delta <= 4; ++delta)
    for (int i = 0; i < count; ++i) {
      const int n = 24 + 12 * (i % 3);
      const std::uint32_t instance_seed =
          seed * 1000003u + static_cast<std::uint32_t>(delta) * 10007u + static_cast<std::uint32_t>(i);
      apack::Graph g = apack::configuration_model(n, delta, instance_seed);
      std::mt19937 rng(instance_seed ^ 0x9e3779b9u);
      std::vector<int> picks = apack::sample_distinct(n, 2 * terminals, rng);
      apack::VertexSet a(picks.begin(), picks.begin() + terminals);
      apack::VertexSet b(picks.begin() + terminals, picks.end());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      const int flow = apack::flow_value(g, a, b);
      apack::BoundedDegreeSolution solution = apack::solve_bounded_degree(g, a, b);
      const int achieved = static_cast<int>(solution.paths.paths.size());
      char ratio[32];
      std::snprintf(ratio, sizeof(ratio), "%.6f",
                    static_cast<double>(achieved) / static_cast<double>(std::max(1, flow)));
      csv << delta << "," << terminals << "," << n << "," << flow << "," << achieved << ","
          << ratio << "\n";
    }
  write_output(cfg, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anticomplete (A,B)-path packings, separators, and hard instances"};
  app.require_subcommand(1);

  OutputConfig cfg;

  auto* flow_cmd = app.add_subcommand("flow", "maximum disjoint (A,B)-paths and a minimum separator");
  std::string flow_file;
  flow_cmd->add_option("file", flow_file, "instance file")->required();
  add_output_flags(flow_cmd, cfg);

  auto* solve_cmd = app.add_subcommand("solve", "disjoint pairwise anticomplete (A,B)-paths");
  std::string solve_file;
  std::string solver = "bounded-degree";
  int requested_k = -1;
  solve_cmd->add_option("file", solve_file, "instance file")->required();
  solve_cmd->add_option("--solver", solver, "bounded-degree | minor-free | both")
      ->check(CLI::IsMember({"bounded-degree", "minor-free", "both"}));
  solve_cmd->add_option("--k", requested_k, "requested path count; below it a separator is reported");
  add_output_flags(solve_cmd, cfg);

  auto* sparsify_cmd = app.add_subcommand("sparsify", "degree-2 sparsification of the instance");
  std::string sparsify_file;
  sparsify_cmd->add_option("file", sparsify_file, "instance file")->required();
  add_output_flags(sparsify_cmd, cfg);

  auto* gen_cmd = app.add_subcommand("gen-counterexample", "emit the k-row hard instance with girth target g");
  int gen_k = 0, gen_g = 0;
  gen_cmd->add_option("k", gen_k, "path count")->required();
  gen_cmd->add_option("g", gen_g, "girth target")->required();
  add_output_flags(gen_cmd, cfg);

  auto* verify_cmd = app.add_subcommand("verify", "check the claims of a generated hard instance");
  std::string verify_file;
  int verify_cap = 24;
  verify_cmd->add_option("file", verify_file, "instance file")->required();
  verify_cmd->add_option("--oracle-cap", verify_cap, "run the exact oracle up to this many vertices");
  add_output_flags(verify_cmd, cfg);

  auto* oracle_cmd = app.add_subcommand("oracle", "exact maximum anticomplete packing");
  std::string oracle_file;
  int oracle_cap = 16;
  long long oracle_paths = 1'000'000;
  oracle_cmd->add_option("file", oracle_file, "instance file")->required();
  oracle_cmd->add_option("--oracle-cap", oracle_cap, "vertex budget");
  oracle_cmd->add_option("--max-paths", oracle_paths, "path enumeration budget");
  add_output_flags(oracle_cmd, cfg);

  auto* bench_cmd = app.add_subcommand("bench", "random-instance sweep, CSV output");
  std::uint32_t bench_seed = 0;
  int bench_count = 5;
  bench_cmd->add_option("--seed", bench_seed, "base seed");
  bench_cmd->add_option("--count", bench_count, "instances per degree")->check(CLI::PositiveNumber);
  add_output_flags(bench_cmd, cfg);

  try {
    app.parse(argc, argv);
    if (flow_cmd->parsed()) return run_flow(flow_file, cfg);
    if (solve_cmd->parsed())
      return run_solve(solve_file, solver,
                       requested_k >= 0 ? std::optional<int>(requested_k) : std::nullopt, cfg);
    if (sparsify_cmd->parsed()) return run_sparsify(sparsify_file, cfg);
    if (gen_cmd->parsed()) return run_gen_counterexample(gen_k, gen_g, cfg);
    if (verify_cmd->parsed()) return run_verify(verify_file, verify_cap, cfg);
    if (oracle_cmd->parsed()) return run_oracle(oracle_file, oracle_cap, oracle_paths, cfg);
    if (bench_cmd->parsed()) return run_bench(bench_seed, bench_count, cfg);
    return 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const apack::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const apack::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const apack::invariant_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
