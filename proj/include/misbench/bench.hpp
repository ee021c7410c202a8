#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "misbench/bounds.hpp"
#include "misbench/graph.hpp"
#include "misbench/mcmc.hpp"
#include "misbench/rrg.hpp"

namespace misbench {

enum class SolverId { ga, dga, sa, pt, exact };

const char* solver_name(SolverId id);
SolverId solver_from_name(const std::string& name);

// One cell of a benchmark matrix. Seeds are explicit so a matrix is fully
// reproducible; repetitions > 1 derive per-repetition seeds with mix_seed.
struct RunSpec {
  SolverId solver = SolverId::dga;
  Vertex n = 0;
  int d = 0;
  std::uint64_t instance_seed = 0;
  std::uint64_t solver_seed = 0;
  std::uint32_t repetitions = 1;
  RrgMethod method = RrgMethod::automatic;
  std::optional<AnnealSchedule> sa;  // required when solver == sa
  std::optional<PtConfig> pt;        // required when solver == pt
};

struct BenchRecord {
  RunSpec spec;                      // echo of the originating cell
  std::uint32_t rep = 0;
  std::uint64_t instance_seed = 0;   // seeds actually used for this repetition
  std::uint64_t solver_seed = 0;
  std::int64_t alpha = -1;
  double density = 0.0;
  std::optional<double> ar;          // absent when no rho_ub is tabulated for d
  double t_gen_s = 0.0;              // instance generation, timed separately
  double t_solve_s = 0.0;            // solver phase only (monotonic clock)
  double t_total_s = 0.0;            // generation + solve, for aggregate comparisons
  bool valid = false;
  std::string error;                 // error name for failure records, else empty
  std::string version;
  std::string rng_id;
  std::string sampler_id;
};

void to_json(nlohmann::json& j, const RunSpec& spec);
void from_json(const nlohmann::json& j, RunSpec& spec);
void to_json(nlohmann::json& j, const BenchRecord& record);
void from_json(const nlohmann::json& j, BenchRecord& record);

struct ScalingFit {
  double exponent = 0.0;
  double prefactor = 0.0;
  double r_squared = 0.0;
  std::vector<Vertex> n_values;  // distinct sizes used in the fit
};

struct BenchOptions {
  unsigned workers = 1;
  BoundsTable bounds = builtin_bounds();
  // Called for each record as it completes (serialized across workers);
  // used to stream records to an append-only sink.
  std::function<void(const BenchRecord&)> sink;
};

// Runs every (spec, repetition) cell; per-run errors become failure records
// and never abort the matrix. The returned order is deterministic (matrix
// order) regardless of worker count.
std::vector<BenchRecord> run_benchmark(const std::vector<RunSpec>& matrix, const BenchOptions& options = {});

// Least-squares line on (log n, log median solver time). Records must share
// solver and d and cover >= 3 distinct n; invalid records are ignored.
ScalingFit fit_scaling(const std::vector<BenchRecord>& records);

enum class ReportFormat { csv, json_lines, plot_table };
ReportFormat report_format_from_name(const std::string& name);

// Byte-deterministic report given the records order.
//   csv         solver,d,n,seed,alpha,density,ar,time_s,valid
//   json-lines  one record object per line
//   plot-table  per (solver, d): aggregated rows over n with reference lines
std::string emit_report(const std::vector<BenchRecord>& records, const BoundsTable& bounds, ReportFormat format);

// Pre-built hard-benchmark matrix: d in {20, 100}, all four stochastic
// solvers, one spec per (n, d, solver, seed index).
std::vector<RunSpec> hard_benchmark_matrix(const std::vector<Vertex>& n_list, std::uint32_t seeds,
                                           std::uint64_t master_seed = 0);

struct ReportSpec {
  std::string path;
  ReportFormat format = ReportFormat::csv;
};

struct BenchConfig {
  std::uint64_t master_seed = 0;
  unsigned workers = 1;
  std::string records_path = "records.jsonl";
  std::vector<ReportSpec> reports;
  BoundsTable bounds = builtin_bounds();
  std::vector<RunSpec> matrix;
};

BenchConfig parse_bench_config(const std::string& text);
BenchConfig load_bench_config(const std::string& path);

// Reads a line-delimited records file; throws IoError with the offending
// line number on malformed input.
std::vector<BenchRecord> load_records(const std::string& path);

}  // namespace misbench
