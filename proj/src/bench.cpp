#include "misbench/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "misbench/exact.hpp"
#include "misbench/greedy.hpp"
#include "misbench/rng.hpp"
#include "misbench/stats.hpp"
#include "misbench/version.hpp"

namespace misbench {

using nlohmann::json;

const char* solver_name(SolverId id) {
  switch (id) {
    case SolverId::ga: return "ga";
    case SolverId::dga: return "dga";
    case SolverId::sa: return "sa";
    case SolverId::pt: return "pt";
    case SolverId::exact: return "exact";
  }
  return "unknown";
}

SolverId solver_from_name(const std::string& name) {
  if (name == "ga") return SolverId::ga;
  if (name == "dga") return SolverId::dga;
  if (name == "sa") return SolverId::sa;
  if (name == "pt") return SolverId::pt;
  if (name == "exact") return SolverId::exact;
  throw Error(errc::invalid_parameter, "unknown solver \"" + name + "\"");
}

ReportFormat report_format_from_name(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "jsonl" || name == "json-lines") return ReportFormat::json_lines;
  if (name == "plot-table" || name == "plot_table") return ReportFormat::plot_table;
  throw Error(errc::unknown_format, "unknown report format \"" + name + "\"");
}

namespace {

const char* ramp_name(Ramp r) { return r == Ramp::linear_in_mu ? "linear" : "geometric"; }

Ramp ramp_from_name(const std::string& name) {
  if (name == "linear") return Ramp::linear_in_mu;
  if (name == "geometric") return Ramp::geometric_in_mu;
  throw Error(errc::invalid_parameter, "unknown ramp \"" + name + "\"");
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

double seconds_between(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

}  // namespace

void to_json(json& j, const RunSpec& spec) {
  j = json{{"solver", solver_name(spec.solver)},
           {"n", spec.n},
           {"d", spec.d},
           {"instance_seed", spec.instance_seed},
           {"solver_seed", spec.solver_seed},
           {"repetitions", spec.repetitions},
           {"method", rrg_method_id(spec.method)}};
  if (spec.sa) {
    j["sa"] = json{{"mu_start", spec.sa->mu_start},
                   {"mu_end", spec.sa->mu_end},
                   {"sweeps", spec.sa->sweeps},
                   {"ramp", ramp_name(spec.sa->ramp)}};
  }
  if (spec.pt) {
    j["pt"] = json{{"mus", spec.pt->mus},
                   {"sweeps_per_swap", spec.pt->sweeps_per_swap},
                   {"rounds", spec.pt->rounds}};
  }
}

void from_json(const json& j, RunSpec& spec) {
  spec.solver = solver_from_name(j.at("solver").get<std::string>());
  spec.n = j.at("n").get<Vertex>();
  spec.d = j.at("d").get<int>();
  spec.instance_seed = j.at("instance_seed").get<std::uint64_t>();
  spec.solver_seed = j.at("solver_seed").get<std::uint64_t>();
  spec.repetitions = j.at("repetitions").get<std::uint32_t>();
  spec.method = rrg_method_from_id(j.at("method").get<std::string>());
  if (j.contains("sa")) {
    AnnealSchedule s;
    s.mu_start = j["sa"].at("mu_start").get<double>();
    s.mu_end = j["sa"].at("mu_end").get<double>();
    s.sweeps = j["sa"].at("sweeps").get<std::uint64_t>();
    s.ramp = ramp_from_name(j["sa"].at("ramp").get<std::string>());
    spec.sa = s;
  }
  if (j.contains("pt")) {
    PtConfig c;
    c.mus = j["pt"].at("mus").get<std::vector<double>>();
    c.sweeps_per_swap = j["pt"].at("sweeps_per_swap").get<std::uint64_t>();
    c.rounds = j["pt"].at("rounds").get<std::uint64_t>();
    spec.pt = c;
  }
}

void to_json(json& j, const BenchRecord& record) {
  j = json{{"spec", record.spec},
           {"rep", record.rep},
           {"instance_seed", record.instance_seed},
           {"solver_seed", record.solver_seed},
           {"alpha", record.alpha},
           {"density", record.density},
           {"t_gen_s", record.t_gen_s},
           {"t_solve_s", record.t_solve_s},
           {"t_total_s", record.t_total_s},
           {"valid", record.valid},
           {"error", record.error},
           {"version", record.version},
           {"rng", record.rng_id},
           {"sampler", record.sampler_id}};
  j["ar"] = record.ar ? json(*record.ar) : json(nullptr);
}

void from_json(const json& j, BenchRecord& record) {
  record.spec = j.at("spec").get<RunSpec>();
  record.rep = j.at("rep").get<std::uint32_t>();
  record.instance_seed = j.at("instance_seed").get<std::uint64_t>();
  record.solver_seed = j.at("solver_seed").get<std::uint64_t>();
  record.alpha = j.at("alpha").get<std::int64_t>();
  record.density = j.at("density").get<double>();
  record.ar = j.at("ar").is_null() ? std::nullopt : std::optional<double>(j.at("ar").get<double>());
  record.t_gen_s = j.at("t_gen_s").get<double>();
  record.t_solve_s = j.at("t_solve_s").get<double>();
  record.t_total_s = j.at("t_total_s").get<double>();
  record.valid = j.at("valid").get<bool>();
  record.error = j.at("error").get<std::string>();
  record.version = j.at("version").get<std::string>();
  record.rng_id = j.at("rng").get<std::string>();
  record.sampler_id = j.at("sampler").get<std::string>();
}

namespace {

BenchRecord execute_run(const RunSpec& spec, std::uint32_t rep, const BoundsTable& bounds) {
  BenchRecord record;
  record.spec = spec;
  record.rep = rep;
  record.version = kVersion;
  record.rng_id = kRngAlgorithmId;
  record.instance_seed = spec.repetitions > 1 ? mix_seed(spec.instance_seed, {rep}) : spec.instance_seed;
  record.solver_seed = spec.repetitions > 1 ? mix_seed(spec.solver_seed, {rep}) : spec.solver_seed;

  try {
    if (spec.d <= 0) {
      throw Error(errc::invalid_parameter, "run spec needs d >= 1, got d=" + std::to_string(spec.d));
    }
    RrgParams params;
    params.n = spec.n;
    params.d = static_cast<Vertex>(spec.d);
    params.seed = record.instance_seed;
    params.method = spec.method;
    record.sampler_id = rrg_method_id(resolve_rrg_method(params));

    const auto t0 = std::chrono::steady_clock::now();
    const Graph g = sample_rrg(params);
    const auto t1 = std::chrono::steady_clock::now();

    IndependentSet result;
    switch (spec.solver) {
      case SolverId::ga:
        result = greedy_random(g, record.solver_seed);
        break;
      case SolverId::dga:
        result = greedy_min_degree(g, record.solver_seed);
        break;
      case SolverId::sa:
        result = simulated_annealing(g, spec.sa ? *spec.sa : default_anneal_schedule(), record.solver_seed);
        break;
      case SolverId::pt:
        result = parallel_tempering(g, spec.pt ? *spec.pt : default_pt_config(), record.solver_seed);
        break;
      case SolverId::exact:
        result = exact_mis(g);
        break;
    }
    const auto t2 = std::chrono::steady_clock::now();

    record.t_gen_s = std::max(seconds_between(t0, t1), 1e-9);
    record.t_solve_s = std::max(seconds_between(t1, t2), 1e-9);
    record.t_total_s = record.t_gen_s + record.t_solve_s;

    if (!validate_is(g, result)) {
      record.error = "ValidationFailed";
      return record;
    }
    record.valid = true;
    record.alpha = static_cast<std::int64_t>(result.alpha());
    record.density = density(result.alpha(), spec.n);
    const BoundsRow* row = bounds.lookup(spec.d);
    if (row != nullptr && row->rho_ub) {
      record.ar = record.density / *row->rho_ub;
    }
  } catch (const Error& e) {
    record.valid = false;
    record.error = error_name(e.code());
  } catch (const std::exception& e) {
    record.valid = false;
    record.error = std::string("Unexpected:") + e.what();
  }
  return record;
}

}  // namespace

std::vector<BenchRecord> run_benchmark(const std::vector<RunSpec>& matrix, const BenchOptions& options) {
  struct Task {
    std::size_t spec_index;
    std::uint32_t rep;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (matrix[i].repetitions < 1) {
      throw Error(errc::invalid_parameter, "repetitions must be >= 1");
    }
    for (std::uint32_t rep = 0; rep < matrix[i].repetitions; ++rep) tasks.push_back({i, rep});
  }

  std::vector<BenchRecord> records(tasks.size());
  const unsigned workers = std::max(1u, options.workers);

  if (workers == 1 || tasks.size() <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      records[t] = execute_run(matrix[tasks[t].spec_index], tasks[t].rep, options.bounds);
      if (options.sink) options.sink(records[t]);
    }
    return records;
  }

  std::atomic<std::size_t> next{0};
  std::mutex sink_mutex;
  std::vector<std::thread> pool;
  const unsigned pool_size = static_cast<unsigned>(std::min<std::size_t>(workers, tasks.size()));
  for (unsigned w = 0; w < pool_size; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t t = next.fetch_add(1);
        if (t >= tasks.size()) return;
        BenchRecord record = execute_run(matrix[tasks[t].spec_index], tasks[t].rep, options.bounds);
        std::lock_guard<std::mutex> lock(sink_mutex);
        records[t] = std::move(record);
        if (options.sink) options.sink(records[t]);
      }
    });
  }
  for (auto& thread : pool) thread.join();
  return records;
}

ScalingFit fit_scaling(const std::vector<BenchRecord>& records) {
  std::map<Vertex, std::vector<double>> times_by_n;
  const BenchRecord* first_valid = nullptr;
  for (const auto& record : records) {
    if (!record.valid) continue;
    if (first_valid == nullptr) {
      first_valid = &record;
    } else if (record.spec.solver != first_valid->spec.solver || record.spec.d != first_valid->spec.d) {
      throw Error(errc::invalid_parameter, "scaling fit needs records sharing solver and d");
    }
    times_by_n[record.spec.n].push_back(record.t_solve_s);
  }
  if (times_by_n.size() < 3) {
    throw Error(errc::insufficient_points,
                "scaling fit needs >= 3 distinct n, got " + std::to_string(times_by_n.size()));
  }

  ScalingFit fit;
  std::vector<double> xs, ys;
  for (const auto& [n, times] : times_by_n) {
    fit.n_values.push_back(n);
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(median(times)));
  }
  const double mx = mean(xs);
  const double my = mean(ys);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  fit.exponent = sxy / sxx;
  const double intercept = my - fit.exponent * mx;
  fit.prefactor = std::exp(intercept);

  double ss_res = 0.0, ss_tot = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double predicted = intercept + fit.exponent * xs[i];
    ss_res += (ys[i] - predicted) * (ys[i] - predicted);
    ss_tot += (ys[i] - my) * (ys[i] - my);
  }
  fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

namespace {

std::string emit_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "solver,d,n,seed,alpha,density,ar,time_s,valid\n";
  for (const auto& r : records) {
    out << solver_name(r.spec.solver) << ',' << r.spec.d << ',' << r.spec.n << ',' << r.instance_seed << ',';
    if (r.valid) {
      out << r.alpha << ',' << fmt_double(r.density) << ',' << (r.ar ? fmt_double(*r.ar) : "") << ','
          << fmt_double(r.t_solve_s) << ',';
    } else {
      out << ",,,,";
    }
    out << (r.valid ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string emit_json_lines(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  for (const auto& r : records) {
    out << json(r).dump() << '\n';
  }
  return out.str();
}

std::string emit_plot_table(const std::vector<BenchRecord>& records, const BoundsTable& bounds) {
  // group key: (solver name, d) -> n -> valid records
  std::map<std::pair<std::string, int>, std::map<Vertex, std::vector<const BenchRecord*>>> groups;
  for (const auto& r : records) {
    if (!r.valid) continue;
    groups[{solver_name(r.spec.solver), r.spec.d}][r.spec.n].push_back(&r);
  }
  std::ostringstream out;
  bool first_group = true;
  for (const auto& [key, by_n] : groups) {
    if (!first_group) out << '\n';
    first_group = false;
    out << "# solver=" << key.first << " d=" << key.second;
    const BoundsRow* row = bounds.lookup(key.second);
    if (row != nullptr) {
      if (row->rho_ub) out << " rho_ub=" << fmt_double(*row->rho_ub);
      if (row->ar_1rsb) out << " ar_1rsb=" << fmt_double(*row->ar_1rsb);
      if (row->ar_mcmc) out << " ar_mcmc=" << fmt_double(*row->ar_mcmc);
      if (row->ar_bpr) out << " ar_bpr=" << fmt_double(*row->ar_bpr);
    }
    out << '\n';
    out << "n,runs,mean_density,std_density,mean_ar,std_ar,median_time_s\n";
    bool ar_above_one = false;
    for (const auto& [n, recs] : by_n) {
      std::vector<double> densities, ars, times;
      for (const BenchRecord* r : recs) {
        densities.push_back(r->density);
        times.push_back(r->t_solve_s);
        if (r->ar) {
          ars.push_back(*r->ar);
          if (*r->ar > 1.0) ar_above_one = true;
        }
      }
      out << n << ',' << recs.size() << ',' << fmt_double(mean(densities)) << ',' << fmt_double(sample_std(densities))
          << ',';
      if (!ars.empty()) {
        out << fmt_double(mean(ars)) << ',' << fmt_double(sample_std(ars));
      } else {
        out << ',';
      }
      out << ',' << fmt_double(median(times)) << '\n';
    }
    if (ar_above_one) {
      out << "# flag: ar>1 at finite n (density bound is asymptotic, not clamped)\n";
    }
  }
  return out.str();
}

}  // namespace

std::string emit_report(const std::vector<BenchRecord>& records, const BoundsTable& bounds, ReportFormat format) {
  switch (format) {
    case ReportFormat::csv: return emit_csv(records);
    case ReportFormat::json_lines: return emit_json_lines(records);
    case ReportFormat::plot_table: return emit_plot_table(records, bounds);
  }
  throw Error(errc::unknown_format, "unrecognized report format");
}

std::vector<RunSpec> hard_benchmark_matrix(const std::vector<Vertex>& n_list, std::uint32_t seeds,
                                           std::uint64_t master_seed) {
  const int degrees[] = {20, 100};
  const SolverId solvers[] = {SolverId::ga, SolverId::dga, SolverId::sa, SolverId::pt};
  std::vector<RunSpec> matrix;
  for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
    for (std::size_t di = 0; di < 2; ++di) {
      for (std::size_t si = 0; si < 4; ++si) {
        for (std::uint32_t s = 0; s < seeds; ++s) {
          RunSpec spec;
          spec.solver = solvers[si];
          spec.n = n_list[ni];
          spec.d = degrees[di];
          spec.instance_seed = mix_seed(master_seed, {0x68617264ULL, ni, di, si, s, 0});
          spec.solver_seed = mix_seed(master_seed, {0x68617264ULL, ni, di, si, s, 1});
          spec.repetitions = 1;
          spec.method = RrgMethod::automatic;
          if (spec.solver == SolverId::sa) spec.sa = default_anneal_schedule();
          if (spec.solver == SolverId::pt) spec.pt = default_pt_config();
          matrix.push_back(std::move(spec));
        }
      }
    }
  }
  return matrix;
}

namespace {

void require_keys(const json& j, const std::set<std::string>& allowed, const std::string& context) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw Error(errc::invalid_parameter, "unknown key \"" + it.key() + "\" in " + context);
    }
  }
}

AnnealSchedule parse_sa_params(const json& j) {
  require_keys(j, {"mu_start", "mu_end", "sweeps", "ramp"}, "sa params");
  AnnealSchedule s = default_anneal_schedule();
  if (j.contains("mu_start")) s.mu_start = j["mu_start"].get<double>();
  if (j.contains("mu_end")) s.mu_end = j["mu_end"].get<double>();
  if (j.contains("sweeps")) s.sweeps = j["sweeps"].get<std::uint64_t>();
  if (j.contains("ramp")) s.ramp = ramp_from_name(j["ramp"].get<std::string>());
  return s;
}

PtConfig parse_pt_params(const json& j) {
  require_keys(j, {"mus", "replicas", "mu_min", "mu_max", "sweeps_per_swap", "rounds"}, "pt params");
  PtConfig c = default_pt_config();
  if (j.contains("mus")) {
    if (j.contains("replicas") || j.contains("mu_min") || j.contains("mu_max")) {
      throw Error(errc::invalid_parameter, "pt params: give either mus or replicas/mu_min/mu_max");
    }
    c.mus = j["mus"].get<std::vector<double>>();
  } else if (j.contains("replicas") || j.contains("mu_min") || j.contains("mu_max")) {
    const int replicas = j.value("replicas", 8);
    const double mu_min = j.value("mu_min", 2.0);
    const double mu_max = j.value("mu_max", 14.0);
    if (replicas < 2 || mu_min <= 0.0 || mu_max < mu_min) {
      throw Error(errc::invalid_parameter, "pt params need replicas >= 2 and 0 < mu_min <= mu_max");
    }
    c.mus.resize(replicas);
    for (int i = 0; i < replicas; ++i) {
      c.mus[i] = mu_min * std::pow(mu_max / mu_min, static_cast<double>(i) / (replicas - 1));
    }
  }
  if (j.contains("sweeps_per_swap")) c.sweeps_per_swap = j["sweeps_per_swap"].get<std::uint64_t>();
  if (j.contains("rounds")) c.rounds = j["rounds"].get<std::uint64_t>();
  return c;
}

}  // namespace

BenchConfig parse_bench_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(errc::invalid_parameter, std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw Error(errc::invalid_parameter, "config root must be an object");
  }

  try {
    require_keys(j, {"master_seed", "workers", "records", "reports", "bounds", "runs", "hard_benchmark"}, "config");
    BenchConfig config;
    config.master_seed = j.value("master_seed", std::uint64_t{0});
    config.workers = j.value("workers", 1u);
    config.records_path = j.value("records", std::string("records.jsonl"));

    if (j.contains("reports")) {
      for (const auto& r : j["reports"]) {
        require_keys(r, {"path", "format"}, "reports entry");
        ReportSpec spec;
        spec.path = r.at("path").get<std::string>();
        spec.format = report_format_from_name(r.value("format", std::string("csv")));
        config.reports.push_back(std::move(spec));
      }
    }

    if (j.contains("bounds")) {
      for (const auto& b : j["bounds"]) {
        require_keys(b, {"d", "rho_ub", "ar_1rsb", "ar_mcmc", "ar_bpr"}, "bounds entry");
        BoundsRow row;
        row.d = b.at("d").get<int>();
        if (b.contains("rho_ub")) row.rho_ub = b["rho_ub"].get<double>();
        if (b.contains("ar_1rsb")) row.ar_1rsb = b["ar_1rsb"].get<double>();
        if (b.contains("ar_mcmc")) row.ar_mcmc = b["ar_mcmc"].get<double>();
        if (b.contains("ar_bpr")) row.ar_bpr = b["ar_bpr"].get<double>();
        config.bounds.upsert(row);
      }
    }

    if (j.contains("runs")) {
      std::size_t run_index = 0;
      for (const auto& r : j["runs"]) {
        require_keys(r,
                     {"solver", "n", "d", "seeds", "repetitions", "method", "instance_seed", "solver_seed", "sa", "pt"},
                     "runs entry");
        RunSpec base;
        base.solver = solver_from_name(r.at("solver").get<std::string>());
        base.n = r.at("n").get<Vertex>();
        base.d = r.at("d").get<int>();
        base.repetitions = r.value("repetitions", 1u);
        base.method = rrg_method_from_id(r.value("method", std::string("auto")));
        if (r.contains("sa")) base.sa = parse_sa_params(r["sa"]);
        if (r.contains("pt")) base.pt = parse_pt_params(r["pt"]);
        if (base.solver == SolverId::sa && !base.sa) base.sa = default_anneal_schedule();
        if (base.solver == SolverId::pt && !base.pt) base.pt = default_pt_config();

        const std::uint32_t seeds = r.value("seeds", 1u);
        if (r.contains("instance_seed") || r.contains("solver_seed")) {
          if (seeds != 1) {
            throw Error(errc::invalid_parameter, "explicit seeds only make sense with seeds=1");
          }
          base.instance_seed = r.value("instance_seed", std::uint64_t{0});
          base.solver_seed = r.value("solver_seed", std::uint64_t{0});
          config.matrix.push_back(base);
        } else {
          for (std::uint32_t s = 0; s < seeds; ++s) {
            RunSpec spec = base;
            spec.instance_seed = mix_seed(config.master_seed, {run_index, s, 0});
            spec.solver_seed = mix_seed(config.master_seed, {run_index, s, 1});
            config.matrix.push_back(std::move(spec));
          }
        }
        ++run_index;
      }
    }

    if (j.contains("hard_benchmark")) {
      const auto& h = j["hard_benchmark"];
      require_keys(h, {"n", "seeds"}, "hard_benchmark");
      const auto ns = h.at("n").get<std::vector<Vertex>>();
      const auto seeds = h.value("seeds", 1u);
      auto preset = hard_benchmark_matrix(ns, seeds, config.master_seed);
      config.matrix.insert(config.matrix.end(), preset.begin(), preset.end());
    }

    return config;
  } catch (const json::exception& e) {
    throw Error(errc::invalid_parameter, std::string("config schema error: ") + e.what());
  }
}

BenchConfig load_bench_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::invalid_parameter, "cannot open config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_bench_config(buffer.str());
}

std::vector<BenchRecord> load_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::io_error, "cannot open records file " + path);
  std::vector<BenchRecord> records;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      records.push_back(json::parse(line).get<BenchRecord>());
    } catch (const std::exception& e) {
      throw Error(errc::io_error, "malformed record at line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return records;
}

}  // namespace misbench
