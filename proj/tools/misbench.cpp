#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "misbench/bench.hpp"
#include "misbench/bounds.hpp"
#include "misbench/exact.hpp"
#include "misbench/graph.hpp"
#include "misbench/greedy.hpp"
#include "misbench/mcmc.hpp"
#include "misbench/rrg.hpp"
#include "misbench/version.hpp"

namespace {

using namespace misbench;

GraphFormat graph_format_from_name(const std::string& name) {
  if (name == "edgelist" || name == "edge-list") return GraphFormat::edge_list;
  if (name == "dimacs") return GraphFormat::dimacs;
  throw Error(errc::unknown_format, "unknown graph format \"" + name + "\"");
}

Graph read_graph_file(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw Error(errc::io_error, "cannot open graph file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  if (format == "auto") {
    // DIMACS files open with comment or problem lines.
    std::size_t i = text.find_first_not_of(" \t\r\n");
    const bool dimacs = i != std::string::npos && (text[i] == 'c' || text[i] == 'p');
    return parse_graph(text, dimacs ? GraphFormat::dimacs : GraphFormat::edge_list);
  }
  return parse_graph(text, graph_format_from_name(format));
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(errc::io_error, "cannot open output file " + path);
  out << bytes;
  if (!out) throw Error(errc::io_error, "failed writing " + path);
}

int cmd_gen(Vertex n, int d, std::uint64_t seed, const std::string& method, const std::string& format,
            const std::string& out_path) {
  if (d < 0) throw Error(errc::invalid_parameter, "d must be >= 1");
  RrgParams params;
  params.n = n;
  params.d = static_cast<Vertex>(d);
  params.seed = seed;
  params.method = rrg_method_from_id(method);
  const Graph g = sample_rrg(params);
  write_output(out_path, serialize_graph(g, graph_format_from_name(format)));
  return 0;
}

int cmd_solve(const std::string& graph_path, const std::string& format, const std::string& solver,
              std::uint64_t seed, const AnnealSchedule& sa, const PtConfig& pt) {
  const Graph g = read_graph_file(graph_path, format);
  const SolverId id = solver_from_name(solver);

  const auto t0 = std::chrono::steady_clock::now();
  IndependentSet result;
  switch (id) {
    case SolverId::ga: result = greedy_random(g, seed); break;
    case SolverId::dga: result = greedy_min_degree(g, seed); break;
    case SolverId::sa: result = simulated_annealing(g, sa, seed); break;
    case SolverId::pt: result = parallel_tempering(g, pt, seed); break;
    case SolverId::exact: result = exact_mis(g); break;
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::cout << serialize_is(result);
  // Summary goes to stderr so stdout stays deterministic given flags.
  std::cerr << "alpha=" << result.alpha() << " density=" << density(result, g.num_vertices())
            << " time_s=" << elapsed << " solver=" << solver << " n=" << g.num_vertices() << '\n';
  return 0;
}

int cmd_bench(const std::string& config_path) {
  const BenchConfig config = load_bench_config(config_path);

  std::ofstream records_out(config.records_path, std::ios::app);
  if (!records_out) throw Error(errc::io_error, "cannot open records file " + config.records_path);

  std::size_t done = 0;
  const std::size_t total = [&] {
    std::size_t count = 0;
    for (const auto& spec : config.matrix) count += spec.repetitions;
    return count;
  }();

  BenchOptions options;
  options.workers = config.workers;
  options.bounds = config.bounds;
  options.sink = [&](const BenchRecord& record) {
    records_out << nlohmann::json(record).dump() << '\n';
    records_out.flush();
    ++done;
    std::cerr << "[" << done << "/" << total << "] " << solver_name(record.spec.solver) << " n=" << record.spec.n
              << " d=" << record.spec.d << (record.valid ? " alpha=" + std::to_string(record.alpha)
                                                         : " error=" + record.error)
              << " t_solve_s=" << record.t_solve_s << '\n';
  };

  const auto records = run_benchmark(config.matrix, options);
  for (const auto& report : config.reports) {
    write_output(report.path, emit_report(records, config.bounds, report.format));
  }
  return 0;
}

int cmd_report(const std::string& records_path, const std::string& format, const std::string& out_path,
               const std::string& config_path) {
  BoundsTable bounds = builtin_bounds();
  if (!config_path.empty()) {
    bounds = load_bench_config(config_path).bounds;
  }
  const ReportFormat report_format = report_format_from_name(format);
  const auto records = load_records(records_path);
  write_output(out_path, emit_report(records, bounds, report_format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MIS benchmark suite: greedy and MCMC solvers on random regular graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", misbench::kVersion);

  // gen
  auto* gen = app.add_subcommand("gen", "Sample a random d-regular graph and write it to a file");
  Vertex gen_n = 0;
  int gen_d = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_method = "auto", gen_format = "edgelist", gen_out = "-";
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--d", gen_d, "degree")->required();
  gen->add_option("--seed", gen_seed, "rng seed");
  gen->add_option("--method", gen_method, "sampler: auto|restart|pairing");
  gen->add_option("--format", gen_format, "output format: edgelist|dimacs");
  gen->add_option("--out", gen_out, "output path, - for stdout");

  // solve
  auto* solve = app.add_subcommand("solve", "Run one solver on a graph file and print the independent set");
  std::string solve_graph, solve_format = "auto", solve_solver = "dga";
  std::uint64_t solve_seed = 0;
  AnnealSchedule solve_sa = default_anneal_schedule();
  PtConfig solve_pt = default_pt_config();
  int solve_replicas = 8;
  double solve_mu_min = 2.0, solve_mu_max = 14.0;
  std::string solve_ramp = "linear";
  solve->add_option("--graph", solve_graph, "graph file")->required();
  solve->add_option("--format", solve_format, "input format: auto|edgelist|dimacs");
  solve->add_option("--solver", solve_solver, "ga|dga|sa|pt|exact")->required();
  solve->add_option("--seed", solve_seed, "rng seed");
  solve->add_option("--mu-start", solve_sa.mu_start, "sa: initial chemical potential");
  solve->add_option("--mu-end", solve_sa.mu_end, "sa: final chemical potential");
  solve->add_option("--sweeps", solve_sa.sweeps, "sa: total sweeps");
  solve->add_option("--ramp", solve_ramp, "sa: linear|geometric");
  solve->add_option("--replicas", solve_replicas, "pt: replica count");
  solve->add_option("--mu-min", solve_mu_min, "pt: lowest potential");
  solve->add_option("--mu-max", solve_mu_max, "pt: highest potential");
  solve->add_option("--rounds", solve_pt.rounds, "pt: swap rounds");
  solve->add_option("--sweeps-per-swap", solve_pt.sweeps_per_swap, "pt: sweeps between swap attempts");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark matrix from a config file");
  std::string bench_config;
  bench->add_option("--config", bench_config, "JSON config file")->required();

  // report
  auto* report = app.add_subcommand("report", "Render a records file as csv, json-lines or plot-table");
  std::string report_records, report_fmt = "csv", report_out = "-", report_config;
  report->add_option("--records", report_records, "records file (json lines)")->required();
  report->add_option("--format", report_fmt, "csv|jsonl|plot-table");
  report->add_option("--out", report_out, "output path, - for stdout");
  report->add_option("--config", report_config, "bench config supplying bounds extensions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_n, gen_d, gen_seed, gen_method, gen_format, gen_out);
    if (solve->parsed()) {
      solve_sa.ramp = (solve_ramp == "geometric") ? Ramp::geometric_in_mu : Ramp::linear_in_mu;
      if (solve_replicas < 2 || solve_mu_min <= 0.0 || solve_mu_max < solve_mu_min) {
        throw Error(errc::invalid_parameter, "pt needs replicas >= 2 and 0 < mu-min <= mu-max");
      }
      solve_pt.mus.resize(solve_replicas);
      for (int i = 0; i < solve_replicas; ++i) {
        solve_pt.mus[i] =
            solve_mu_min * std::pow(solve_mu_max / solve_mu_min, static_cast<double>(i) / (solve_replicas - 1));
      }
      return cmd_solve(solve_graph, solve_format, solve_solver, solve_seed, solve_sa, solve_pt);
    }
    if (bench->parsed()) return cmd_bench(bench_config);
    if (report->parsed()) return cmd_report(report_records, report_fmt, report_out, report_config);
  } catch (const misbench::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return misbench::is_usage_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
