#pragma once

#include <cstdint>
#include <vector>

#include "misbench/graph.hpp"
#include "misbench/independent_set.hpp"

namespace misbench {

// Diagnostic pick order: step t, picked vertex, and its residual degree in
// the surviving graph at pick time. The final step index is the stopping
// time (the surviving graph is empty afterwards).
struct GreedyTraceEntry {
  std::uint64_t step;
  Vertex vertex;
  Vertex residual_degree;
};
using GreedyTrace = std::vector<GreedyTraceEntry>;

// Random greedy: repeatedly add a uniformly random surviving vertex and
// delete its neighbors. Implemented as one pass over a random permutation
// with a removal flag, which has the same law and runs in O(n + m).
IndependentSet greedy_random(const Graph& g, std::uint64_t seed, GreedyTrace* trace = nullptr);

// Degree-based greedy: same process, but always pick a vertex of minimum
// residual degree (ties broken uniformly at random). Bucket-queue
// bookkeeping keeps the total work near-linear in n + m.
IndependentSet greedy_min_degree(const Graph& g, std::uint64_t seed, GreedyTrace* trace = nullptr);

// Test hook: identical to greedy_min_degree but audits the bucket queue
// against independently tracked residual degrees at every pick.
IndependentSet greedy_min_degree_audited(const Graph& g, std::uint64_t seed, GreedyTrace* trace = nullptr);

}  // namespace misbench
