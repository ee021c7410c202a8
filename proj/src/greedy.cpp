#include "misbench/greedy.hpp"

#include <numeric>

#include "misbench/bucket_queue.hpp"
#include "misbench/rng.hpp"

namespace misbench {

namespace {

IndependentSet collect_members(const std::vector<std::uint8_t>& picked) {
  IndependentSet result;
  for (Vertex v = 0; v < picked.size(); ++v) {
    if (picked[v]) result.members.push_back(v);
  }
  return result;
}

Vertex count_alive_neighbors(const Graph& g, const BucketQueue& queue, Vertex v) {
  Vertex count = 0;
  for (Vertex u : g.neighbors(v)) count += queue.contains(u) ? 1 : 0;
  return count;
}

template <bool Audit>
IndependentSet min_degree_impl(const Graph& g, std::uint64_t seed, GreedyTrace* trace) {
  const Vertex n = g.num_vertices();
  Rng rng(seed);
  std::vector<std::uint8_t> picked(n, 0);
  std::vector<std::uint32_t> degrees(n);
  for (Vertex v = 0; v < n; ++v) degrees[v] = g.degree(v);
  BucketQueue queue(n == 0 ? 0 : g.max_degree(), degrees);
  degrees.clear();
  degrees.shrink_to_fit();

  std::uint64_t step = 0;
  while (!queue.empty()) {
    if (trace) trace->push_back({step, 0, queue.min_key()});
    const Vertex v = queue.pop_random_min(rng);
    picked[v] = 1;
    if (trace) trace->back().vertex = v;
    ++step;

    const auto neighbors = g.neighbors(v);
    for (Vertex u : neighbors) queue.prefetch(u);
    for (Vertex u : neighbors) g.prefetch_neighbors(u);
    for (Vertex u : neighbors) {
      if (!queue.contains(u)) continue;
      queue.erase(u);
      const auto second = g.neighbors(u);
      for (Vertex w : second) queue.prefetch(w);
      for (Vertex w : second) {
        if (queue.contains(w)) queue.decrease_by_one(w);
      }
    }

    if constexpr (Audit) {
      queue.audit();
      for (Vertex w = 0; w < n; ++w) {
        if (queue.contains(w) && queue.key_of(w) != count_alive_neighbors(g, queue, w)) {
          throw Error(errc::invalid_parameter,
                      "greedy audit: vertex " + std::to_string(w) + " filed under stale degree");
        }
      }
    }
  }
  return collect_members(picked);
}

}  // namespace

IndependentSet greedy_random(const Graph& g, std::uint64_t seed, GreedyTrace* trace) {
  const Vertex n = g.num_vertices();
  Rng rng(seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);

  std::vector<std::uint8_t> removed(n, 0);
  std::vector<std::uint8_t> picked(n, 0);
  std::vector<std::uint8_t> alive(trace ? n : 0, 1);

  std::uint64_t step = 0;
  for (Vertex v : order) {
    if (removed[v]) continue;
    picked[v] = 1;
    if (trace) {
      Vertex residual = 0;
      for (Vertex u : g.neighbors(v)) residual += alive[u];
      trace->push_back({step, v, residual});
      alive[v] = 0;
      for (Vertex u : g.neighbors(v)) alive[u] = 0;
    }
    ++step;
    removed[v] = 1;
    for (Vertex u : g.neighbors(v)) removed[u] = 1;
  }
  return collect_members(picked);
}

IndependentSet greedy_min_degree(const Graph& g, std::uint64_t seed, GreedyTrace* trace) {
  return min_degree_impl<false>(g, seed, trace);
}

IndependentSet greedy_min_degree_audited(const Graph& g, std::uint64_t seed, GreedyTrace* trace) {
  return min_degree_impl<true>(g, seed, trace);
}

}  // namespace misbench
