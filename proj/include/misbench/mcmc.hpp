#pragma once

#include <cstdint>
#include <vector>

#include "misbench/graph.hpp"
#include "misbench/independent_set.hpp"
#include "misbench/rng.hpp"

namespace misbench {

// Grand-canonical hard-core configuration: occupied vertices always form an
// independent set, so constraint violations are unrepresentable. blocked(v)
// counts occupied neighbors; insertions are only proposed on unblocked sites.
class HardCoreState {
 public:
  explicit HardCoreState(const Graph& g);

  std::uint64_t size() const { return size_; }
  bool occupied(Vertex v) const { return occupation_[v] != 0; }
  const Graph& graph() const { return *graph_; }

  IndependentSet to_independent_set() const;

  // Recomputes blocked counts from scratch and checks the IS property.
  void audit() const;

 private:
  friend std::uint64_t mcmc_sweep(HardCoreState& state, double mu, Rng& rng);

  const Graph* graph_;
  std::vector<std::uint8_t> occupation_;
  std::vector<std::int32_t> blocked_;
  std::uint64_t size_ = 0;
};

// One sweep = n single-vertex Metropolis proposals on the measure
// exp(mu * |IS|): occupied sites propose deletion (accepted with exp(-mu)),
// unblocked empty sites insert (accepted with min(1, exp(mu))), singly
// blocked sites hop the blocking particle over (size-preserving, symmetric,
// always accepted), multiply blocked sites reject. Every move preserves
// detailed balance for the hard-core measure. Returns the accepted count.
std::uint64_t mcmc_sweep(HardCoreState& state, double mu, Rng& rng);

enum class Ramp { linear_in_mu, geometric_in_mu };

struct AnnealSchedule {
  double mu_start = 0.0;
  double mu_end = 12.0;
  std::uint64_t sweeps = 20000;
  Ramp ramp = Ramp::linear_in_mu;
};

struct PtConfig {
  std::vector<double> mus;             // ascending chemical potentials, one per replica
  std::uint64_t sweeps_per_swap = 1;   // sweeps between swap attempts
  std::uint64_t rounds = 10000;        // total swap rounds
};

// Production defaults used by the benchmark harness: SA ramps mu 0 -> 12
// linearly over 2e4 sweeps; PT runs 8 replicas spaced geometrically in
// [2, 14] with a swap attempt after every sweep.
PtConfig default_pt_config();
AnnealSchedule default_anneal_schedule();

struct SaResult {
  IndependentSet best;
  std::vector<std::uint64_t> best_size_series;  // best-so-far after each sweep
};

struct PtResult {
  IndependentSet best;
  std::vector<std::uint64_t> best_size_series;   // best-so-far after each round
  std::vector<std::uint64_t> swap_attempts;      // per adjacent pair
  std::vector<std::uint64_t> swap_accepts;       // per adjacent pair
};

// Anneal mu over the schedule and return the best configuration seen.
IndependentSet simulated_annealing(const Graph& g, const AnnealSchedule& schedule, std::uint64_t seed);
SaResult simulated_annealing_ex(const Graph& g, const AnnealSchedule& schedule, std::uint64_t seed);

// Parallel tempering across config.mus; adjacent replicas swap configurations
// with Metropolis probability min(1, exp((mu_i - mu_j) * (size_j - size_i))).
// Best state observed across all replicas is returned.
IndependentSet parallel_tempering(const Graph& g, const PtConfig& config, std::uint64_t seed);
PtResult parallel_tempering_ex(const Graph& g, const PtConfig& config, std::uint64_t seed);

// Core entry with explicit per-replica RNG seeds (replica i starts from
// seeds[i]; swap decisions use swap_seed).
PtResult parallel_tempering_seeded(const Graph& g, const PtConfig& config,
                                   const std::vector<std::uint64_t>& replica_seeds, std::uint64_t swap_seed);

}  // namespace misbench
