#include "misbench/exact.hpp"

#include <bit>

namespace misbench {

namespace {

struct Searcher {
  const std::vector<std::uint64_t>& adjacency;
  std::uint64_t best_mask = 0;
  int best_size = 0;

  void run(std::uint64_t candidates, std::uint64_t current_mask, int current_size) {
    if (current_size + std::popcount(candidates) <= best_size) return;
    if (candidates == 0) {
      best_size = current_size;
      best_mask = current_mask;
      return;
    }
    // Branch vertex: highest residual degree within the candidate set.
    std::uint64_t scan = candidates;
    int pick = -1;
    int pick_degree = -1;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      const int deg = std::popcount(adjacency[v] & candidates);
      if (deg > pick_degree) {
        pick_degree = deg;
        pick = v;
      }
    }
    const std::uint64_t bit = std::uint64_t{1} << pick;
    run(candidates & ~bit, current_mask, current_size);                      // exclude first
    run(candidates & ~(bit | adjacency[pick]), current_mask | bit, current_size + 1);  // include
  }
};

}  // namespace

IndependentSet exact_mis(const Graph& g) {
  const Vertex n = g.num_vertices();
  if (n > kExactMisLimit) {
    throw Error(errc::too_large, "exact_mis supports n <= " + std::to_string(kExactMisLimit) +
                                     ", got n=" + std::to_string(n));
  }
  std::vector<std::uint64_t> adjacency(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adjacency[u] |= std::uint64_t{1} << v;
    adjacency[v] |= std::uint64_t{1} << u;
  }
  Searcher searcher{adjacency};
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  searcher.run(all, 0, 0);

  IndependentSet result;
  std::uint64_t mask = searcher.best_mask;
  while (mask) {
    result.members.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return result;
}

}  // namespace misbench
