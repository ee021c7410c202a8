#include "misbench/mcmc.hpp"

#include <cmath>
#include <string>

namespace misbench {

HardCoreState::HardCoreState(const Graph& g)
    : graph_(&g), occupation_(g.num_vertices(), 0), blocked_(g.num_vertices(), 0) {}

IndependentSet HardCoreState::to_independent_set() const {
  IndependentSet result;
  result.members.reserve(size_);
  for (Vertex v = 0; v < occupation_.size(); ++v) {
    if (occupation_[v]) result.members.push_back(v);
  }
  return result;
}

void HardCoreState::audit() const {
  std::uint64_t count = 0;
  for (Vertex v = 0; v < occupation_.size(); ++v) {
    std::int32_t occupied_neighbors = 0;
    for (Vertex u : graph_->neighbors(v)) occupied_neighbors += occupation_[u];
    if (occupied_neighbors != blocked_[v]) {
      throw Error(errc::invalid_parameter, "hard-core audit: stale blocked count at " + std::to_string(v));
    }
    if (occupation_[v] && occupied_neighbors > 0) {
      throw Error(errc::invalid_parameter, "hard-core audit: occupied vertex " + std::to_string(v) + " has occupied neighbor");
    }
    count += occupation_[v];
  }
  if (count != size_) {
    throw Error(errc::invalid_parameter, "hard-core audit: size mismatch");
  }
}

std::uint64_t mcmc_sweep(HardCoreState& state, double mu, Rng& rng) {
  const Graph& g = *state.graph_;
  const Vertex n = g.num_vertices();
  if (n == 0) return 0;
  const double delete_accept = std::exp(-mu);
  std::uint64_t accepted = 0;
  for (Vertex proposal = 0; proposal < n; ++proposal) {
    const auto v = static_cast<Vertex>(rng.below(n));
    if (state.occupation_[v]) {
      if (rng.real01() < delete_accept) {
        state.occupation_[v] = 0;
        --state.size_;
        for (Vertex u : g.neighbors(v)) --state.blocked_[u];
        ++accepted;
      }
    } else if (state.blocked_[v] == 0) {
      // mu >= 0 makes the insertion acceptance min(1, e^mu) = 1.
      state.occupation_[v] = 1;
      ++state.size_;
      for (Vertex u : g.neighbors(v)) ++state.blocked_[u];
      ++accepted;
    } else if (state.blocked_[v] == 1) {
      // Hop: relocate the unique blocking particle onto v. The proposal is
      // symmetric (uniform vertex pick both ways) and the set size is
      // unchanged, so the Metropolis acceptance is 1. Without hops the
      // chain compacts only logarithmically at large mu.
      Vertex blocker = n;
      for (Vertex u : g.neighbors(v)) {
        if (state.occupation_[u]) {
          blocker = u;
          break;
        }
      }
      state.occupation_[blocker] = 0;
      for (Vertex u : g.neighbors(blocker)) --state.blocked_[u];
      state.occupation_[v] = 1;
      for (Vertex u : g.neighbors(v)) ++state.blocked_[u];
      ++accepted;
    }
  }
  return accepted;
}

namespace {

void check_schedule(const AnnealSchedule& s) {
  if (s.mu_start < 0.0 || s.mu_end < s.mu_start) {
    throw Error(errc::invalid_parameter, "anneal schedule needs mu_end >= mu_start >= 0");
  }
  if (s.ramp == Ramp::geometric_in_mu && s.mu_start <= 0.0) {
    throw Error(errc::invalid_parameter, "geometric ramp needs mu_start > 0");
  }
}

double mu_at(const AnnealSchedule& s, std::uint64_t sweep) {
  if (s.sweeps <= 1) return s.mu_end;
  const double t = static_cast<double>(sweep) / static_cast<double>(s.sweeps - 1);
  if (s.ramp == Ramp::linear_in_mu) return s.mu_start + (s.mu_end - s.mu_start) * t;
  return s.mu_start * std::pow(s.mu_end / s.mu_start, t);
}

void check_pt_config(const PtConfig& c) {
  if (c.mus.size() < 2) {
    throw Error(errc::invalid_parameter, "parallel tempering needs at least 2 replicas");
  }
  for (std::size_t i = 0; i < c.mus.size(); ++i) {
    if (c.mus[i] < 0.0) throw Error(errc::invalid_parameter, "replica potentials must be >= 0");
    if (i > 0 && c.mus[i] < c.mus[i - 1]) {
      throw Error(errc::invalid_parameter, "replica potentials must be ascending");
    }
  }
}

}  // namespace

PtConfig default_pt_config() {
  // Calibrated so the reference approximation ratios are reached at n = 2e4
  // within desk-scale budgets. The ladder sits at high mu on purpose: for
  // large n the swap acceptance between low-potential replicas decays like
  // exp(-dmu * dalpha), so replicas below the compaction window contribute
  // nothing and the useful work happens near the top.
  PtConfig config;
  const int replicas = 8;
  const double mu_min = 2.0;
  const double mu_max = 14.0;
  config.mus.resize(replicas);
  for (int i = 0; i < replicas; ++i) {
    config.mus[i] = mu_min * std::pow(mu_max / mu_min, static_cast<double>(i) / (replicas - 1));
  }
  config.sweeps_per_swap = 1;
  config.rounds = 10000;
  return config;
}

AnnealSchedule default_anneal_schedule() { return AnnealSchedule{}; }

SaResult simulated_annealing_ex(const Graph& g, const AnnealSchedule& schedule, std::uint64_t seed) {
  check_schedule(schedule);
  Rng rng(seed);
  HardCoreState state(g);
  SaResult result;
  result.best_size_series.reserve(schedule.sweeps);
  std::uint64_t best_size = 0;
  for (std::uint64_t sweep = 0; sweep < schedule.sweeps; ++sweep) {
    mcmc_sweep(state, mu_at(schedule, sweep), rng);
    if (state.size() > best_size) {
      best_size = state.size();
      result.best = state.to_independent_set();
    }
    result.best_size_series.push_back(best_size);
  }
  return result;
}

IndependentSet simulated_annealing(const Graph& g, const AnnealSchedule& schedule, std::uint64_t seed) {
  return simulated_annealing_ex(g, schedule, seed).best;
}

PtResult parallel_tempering_seeded(const Graph& g, const PtConfig& config,
                                   const std::vector<std::uint64_t>& replica_seeds, std::uint64_t swap_seed) {
  check_pt_config(config);
  if (replica_seeds.size() != config.mus.size()) {
    throw Error(errc::invalid_parameter, "need one seed per replica");
  }
  const std::size_t replicas = config.mus.size();
  std::vector<HardCoreState> states(replicas, HardCoreState(g));
  std::vector<Rng> rngs;
  rngs.reserve(replicas);
  for (std::uint64_t s : replica_seeds) rngs.emplace_back(s);
  Rng swap_rng(swap_seed);

  PtResult result;
  result.best_size_series.reserve(config.rounds);
  result.swap_attempts.assign(replicas - 1, 0);
  result.swap_accepts.assign(replicas - 1, 0);
  std::uint64_t best_size = 0;
  bool best_initialized = false;

  for (std::uint64_t round = 0; round < config.rounds; ++round) {
    for (std::size_t i = 0; i < replicas; ++i) {
      for (std::uint64_t s = 0; s < config.sweeps_per_swap; ++s) {
        mcmc_sweep(states[i], config.mus[i], rngs[i]);
      }
      if (!best_initialized || states[i].size() > best_size) {
        best_size = states[i].size();
        result.best = states[i].to_independent_set();
        best_initialized = true;
      }
    }
    for (std::size_t i = 0; i + 1 < replicas; ++i) {
      ++result.swap_attempts[i];
      const double exponent = (config.mus[i] - config.mus[i + 1]) *
                              (static_cast<double>(states[i + 1].size()) - static_cast<double>(states[i].size()));
      if (exponent >= 0.0 || swap_rng.real01() < std::exp(exponent)) {
        std::swap(states[i], states[i + 1]);
        ++result.swap_accepts[i];
      }
    }
    result.best_size_series.push_back(best_size);
  }
  return result;
}

PtResult parallel_tempering_ex(const Graph& g, const PtConfig& config, std::uint64_t seed) {
  check_pt_config(config);
  std::vector<std::uint64_t> replica_seeds(config.mus.size());
  for (std::size_t i = 0; i < replica_seeds.size(); ++i) {
    replica_seeds[i] = mix_seed(seed, {0x7265706cULL, i});
  }
  return parallel_tempering_seeded(g, config, replica_seeds, mix_seed(seed, {0x73776170ULL}));
}

IndependentSet parallel_tempering(const Graph& g, const PtConfig& config, std::uint64_t seed) {
  return parallel_tempering_ex(g, config, seed).best;
}

}  // namespace misbench
