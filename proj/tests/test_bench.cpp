#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include "misbench/bench.hpp"
#include "misbench/rng.hpp"
#include "misbench/version.hpp"

using namespace misbench;

namespace {

BenchRecord synthetic_record(Vertex n, double t_solve, SolverId solver = SolverId::dga, int d = 3) {
  BenchRecord record;
  record.spec.solver = solver;
  record.spec.n = n;
  record.spec.d = d;
  record.alpha = n / 2;
  record.density = 0.5;
  record.t_solve_s = t_solve;
  record.t_total_s = t_solve;
  record.valid = true;
  record.version = kVersion;
  record.rng_id = kRngAlgorithmId;
  return record;
}

}  // namespace

TEST_CASE("scaling fit recovers exact power laws") {
  std::vector<BenchRecord> linear, quadratic;
  for (Vertex n : {1000u, 10000u, 100000u, 1000000u}) {
    linear.push_back(synthetic_record(n, 3.0 * n));
    quadratic.push_back(synthetic_record(n, 2e-9 * static_cast<double>(n) * n));
  }
  const ScalingFit fit1 = fit_scaling(linear);
  CHECK(fit1.exponent == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(fit1.prefactor == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(fit1.r_squared == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(fit1.n_values.size() == 4);

  const ScalingFit fit2 = fit_scaling(quadratic);
  CHECK(fit2.exponent == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("scaling fit input validation") {
  std::vector<BenchRecord> records = {synthetic_record(100, 1.0), synthetic_record(1000, 10.0)};
  try {
    fit_scaling(records);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::insufficient_points);
  }
  records.push_back(synthetic_record(10000, 100.0, SolverId::ga));
  CHECK_THROWS_AS(fit_scaling(records), Error);

  // invalid records never enter the fit
  std::vector<BenchRecord> with_invalid = {synthetic_record(100, 1.0), synthetic_record(1000, 10.0),
                                           synthetic_record(10000, 100.0)};
  BenchRecord bad = synthetic_record(50000, 1e9);
  bad.valid = false;
  with_invalid.push_back(bad);
  const ScalingFit fit = fit_scaling(with_invalid);
  CHECK(fit.n_values == std::vector<Vertex>{100, 1000, 10000});
  CHECK(fit.exponent == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("run_benchmark produces one validated record per repetition") {
  RunSpec spec;
  spec.solver = SolverId::dga;
  spec.n = 1000;
  spec.d = 3;
  spec.instance_seed = 5;
  spec.solver_seed = 6;
  spec.repetitions = 5;

  std::size_t streamed = 0;
  BenchOptions options;
  options.sink = [&](const BenchRecord&) { ++streamed; };
  const auto records = run_benchmark({spec}, options);
  REQUIRE(records.size() == 5);
  CHECK(streamed == 5);

  std::set<std::uint64_t> instance_seeds;
  for (const auto& record : records) {
    CHECK(record.valid);
    CHECK(record.error.empty());
    CHECK(record.alpha > 0);
    CHECK(record.ar.has_value());
    CHECK(record.t_solve_s > 0.0);
    CHECK(record.t_gen_s > 0.0);
    CHECK(record.sampler_id == std::string("config-restart"));
    CHECK(record.rng_id == std::string(kRngAlgorithmId));
    instance_seeds.insert(record.instance_seed);
  }
  CHECK(instance_seeds.size() == 5);  // repetitions use derived seeds
}

TEST_CASE("infeasible parameters become failure records, not aborts") {
  RunSpec good;
  good.solver = SolverId::ga;
  good.n = 100;
  good.d = 3;
  RunSpec bad = good;
  bad.n = 5;  // n*d odd
  const auto records = run_benchmark({bad, good});
  REQUIRE(records.size() == 2);
  CHECK_FALSE(records[0].valid);
  CHECK(records[0].error == "InfeasibleParity");
  CHECK(records[1].valid);
}

TEST_CASE("worker pool reproduces the single-threaded matrix") {
  std::vector<RunSpec> matrix;
  for (int i = 0; i < 6; ++i) {
    RunSpec spec;
    spec.solver = i % 2 == 0 ? SolverId::dga : SolverId::ga;
    spec.n = 500 + 100 * static_cast<Vertex>(i);
    spec.d = 3;
    spec.instance_seed = static_cast<std::uint64_t>(i);
    spec.solver_seed = static_cast<std::uint64_t>(100 + i);
    matrix.push_back(spec);
  }
  BenchOptions serial;
  BenchOptions pooled;
  pooled.workers = 3;
  const auto a = run_benchmark(matrix, serial);
  const auto b = run_benchmark(matrix, pooled);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].alpha == b[i].alpha);
    CHECK(a[i].instance_seed == b[i].instance_seed);
    CHECK(a[i].valid == b[i].valid);
  }
}

TEST_CASE("min-degree greedy regression value at d=5, n=1e5") {
  // Golden number pinned from the first verified 20-seed run of this suite:
  // mean approximation ratio 0.9282 (mean density 0.35681). Concentration
  // keeps the 20-seed mean well inside +-0.003.
  std::vector<RunSpec> matrix;
  for (std::uint32_t s = 0; s < 20; ++s) {
    RunSpec spec;
    spec.solver = SolverId::dga;
    spec.n = 100000;
    spec.d = 5;
    spec.instance_seed = mix_seed(1337, {0, s, 0});
    spec.solver_seed = mix_seed(1337, {0, s, 1});
    matrix.push_back(spec);
  }
  const auto records = run_benchmark(matrix);
  double sum = 0.0;
  for (const auto& record : records) {
    REQUIRE(record.valid);
    REQUIRE(record.ar.has_value());
    sum += *record.ar;
  }
  CHECK(sum / 20.0 == doctest::Approx(0.9282).epsilon(0.0032));
}

TEST_CASE("records without a tabulated bound carry no ar") {
  RunSpec spec;
  spec.solver = SolverId::dga;
  spec.n = 200;
  spec.d = 4;
  const auto records = run_benchmark({spec});
  REQUIRE(records.size() == 1);
  CHECK(records[0].valid);
  CHECK_FALSE(records[0].ar.has_value());

  BenchOptions options;
  options.bounds.upsert({4, 0.40, {}, {}, {}});
  const auto with_bound = run_benchmark({spec}, options);
  CHECK(with_bound[0].ar.has_value());
}

TEST_CASE("csv report") {
  CHECK(emit_report({}, builtin_bounds(), ReportFormat::csv) == "solver,d,n,seed,alpha,density,ar,time_s,valid\n");

  BenchRecord record = synthetic_record(1000, 0.25);
  record.instance_seed = 77;
  record.ar = 0.5 / 0.45537;
  const std::string report = emit_report({record}, builtin_bounds(), ReportFormat::csv);
  CHECK(report == emit_report({record}, builtin_bounds(), ReportFormat::csv));  // byte identical
  CHECK(report.find("dga,3,1000,77,500,0.5,") != std::string::npos);

  BenchRecord failed;
  failed.spec.solver = SolverId::ga;
  failed.spec.n = 5;
  failed.spec.d = 3;
  failed.error = "InfeasibleParity";
  CHECK(emit_report({failed}, builtin_bounds(), ReportFormat::csv).find("ga,3,5,0,,,,,false") != std::string::npos);
}

TEST_CASE("plot-table report includes reference lines") {
  std::vector<BenchRecord> records;
  for (int i = 0; i < 4; ++i) {
    BenchRecord r = synthetic_record(1000, 0.1 + 0.01 * i);
    r.ar = 0.95 + 0.001 * i;
    records.push_back(r);
  }
  const std::string table = emit_report(records, builtin_bounds(), ReportFormat::plot_table);
  CHECK(table.find("# solver=dga d=3") != std::string::npos);
  CHECK(table.find("rho_ub=0.45537") != std::string::npos);
  CHECK(table.find("ar_1rsb=0.99") != std::string::npos);
  CHECK(table.find("ar_mcmc=0.984") != std::string::npos);
  CHECK(table.find("n,runs,mean_density,std_density,mean_ar,std_ar,median_time_s") != std::string::npos);
  CHECK(table.find("1000,4,") != std::string::npos);

  // ar beyond 1 is flagged, not clamped
  records[0].ar = 1.02;
  const std::string flagged = emit_report(records, builtin_bounds(), ReportFormat::plot_table);
  CHECK(flagged.find("# flag: ar>1") != std::string::npos);
}

TEST_CASE("json-lines report round-trips through load_records") {
  RunSpec spec;
  spec.solver = SolverId::sa;
  spec.n = 60;
  spec.d = 3;
  spec.sa = AnnealSchedule{0.0, 6.0, 50, Ramp::linear_in_mu};
  spec.instance_seed = 3;
  spec.solver_seed = 4;
  const auto records = run_benchmark({spec});
  const std::string lines = emit_report(records, builtin_bounds(), ReportFormat::json_lines);

  const std::string path = "test_records_roundtrip.jsonl";
  {
    std::ofstream out(path);
    out << lines;
  }
  const auto loaded = load_records(path);
  REQUIRE(loaded.size() == records.size());
  CHECK(loaded[0].alpha == records[0].alpha);
  CHECK(loaded[0].spec.solver == SolverId::sa);
  CHECK(loaded[0].spec.sa->mu_end == 6.0);
  CHECK(loaded[0].instance_seed == records[0].instance_seed);
  std::remove(path.c_str());
}

TEST_CASE("load_records reports the offending line") {
  const std::string path = "test_records_malformed.jsonl";
  {
    std::ofstream out(path);
    out << "{not json}\n";
  }
  try {
    load_records(path);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::io_error);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
  std::remove(path.c_str());
}

TEST_CASE("hard benchmark matrix shape") {
  const auto matrix = hard_benchmark_matrix({10000}, 5);
  CHECK(matrix.size() == 40);  // 2 degrees x 4 solvers x 5 seeds
  CHECK(hard_benchmark_matrix({}, 5).empty());
  std::set<int> degrees;
  std::set<SolverId> solvers;
  std::set<std::uint64_t> seeds;
  for (const auto& spec : matrix) {
    degrees.insert(spec.d);
    solvers.insert(spec.solver);
    seeds.insert(spec.instance_seed);
    CHECK(spec.n == 10000);
    CHECK(spec.repetitions == 1);
  }
  CHECK(degrees == std::set<int>{20, 100});
  CHECK(solvers == std::set<SolverId>{SolverId::ga, SolverId::dga, SolverId::sa, SolverId::pt});
  CHECK(seeds.size() == 40);
  CHECK(hard_benchmark_matrix({10000}, 5)[0].instance_seed == matrix[0].instance_seed);  // deterministic
}

TEST_CASE("config parsing expands seeds deterministically") {
  const std::string text = R"({
    "master_seed": 42,
    "workers": 2,
    "records": "out.jsonl",
    "reports": [{"path": "r.csv", "format": "csv"}],
    "bounds": [{"d": 20, "rho_ub": 0.1623, "ar_mcmc": 0.97}],
    "runs": [
      {"solver": "dga", "n": 1000, "d": 3, "seeds": 4},
      {"solver": "pt", "n": 500, "d": 5, "seeds": 2,
       "pt": {"replicas": 4, "mu_min": 0.5, "mu_max": 8.0, "rounds": 100}}
    ]
  })";
  const BenchConfig config = parse_bench_config(text);
  CHECK(config.master_seed == 42);
  CHECK(config.workers == 2);
  CHECK(config.records_path == "out.jsonl");
  REQUIRE(config.reports.size() == 1);
  CHECK(config.reports[0].format == ReportFormat::csv);
  CHECK(config.bounds.lookup(20)->rho_ub == 0.1623);
  CHECK(config.bounds.lookup(3)->rho_ub == 0.45537);  // builtin rows kept
  REQUIRE(config.matrix.size() == 6);
  CHECK(config.matrix[0].instance_seed == mix_seed(42, {0, 0, 0}));
  CHECK(config.matrix[1].instance_seed == mix_seed(42, {0, 1, 0}));
  REQUIRE(config.matrix[4].pt.has_value());
  CHECK(config.matrix[4].pt->mus.size() == 4);
  CHECK(config.matrix[4].pt->rounds == 100);
  CHECK(parse_bench_config(text).matrix[0].instance_seed == config.matrix[0].instance_seed);
}

TEST_CASE("config rejects unknown keys and bad values") {
  CHECK_THROWS_AS(parse_bench_config("{"), Error);
  CHECK_THROWS_AS(parse_bench_config(R"({"nonsense": 1})"), Error);
  CHECK_THROWS_AS(parse_bench_config(R"({"runs": [{"solver": "warp", "n": 10, "d": 3}]})"), Error);
  CHECK_THROWS_AS(parse_bench_config(R"({"runs": [{"solver": "dga", "n": 10, "d": 3, "typo": 1}]})"), Error);
  CHECK_THROWS_AS(parse_bench_config(R"({"bounds": [{"d": 2, "rho_ub": 0.5}]})"), Error);
  CHECK_THROWS_AS(parse_bench_config(R"({"runs": [{"solver":"dga","n":10,"d":3,"seeds":2,"instance_seed":1}]})"),
                  Error);
}

TEST_CASE("hard benchmark preset in config") {
  const BenchConfig config = parse_bench_config(R"({"hard_benchmark": {"n": [200], "seeds": 2}})");
  CHECK(config.matrix.size() == 16);
  for (const auto& spec : config.matrix) {
    CHECK((spec.d == 20 || spec.d == 100));
  }
}
