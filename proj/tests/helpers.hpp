#pragma once

#include <cstdint>
#include <vector>

#include "misbench/graph.hpp"
#include "misbench/rng.hpp"

namespace misbench::test {

inline Graph make_cycle(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return build_graph(n, std::move(edges));
}

inline Graph make_path(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return build_graph(n, std::move(edges));
}

inline Graph make_complete(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return build_graph(n, std::move(edges));
}

inline Graph make_edgeless(Vertex n) { return build_graph(n, {}); }

// Center 0, leaves 1..leaves.
inline Graph make_star(Vertex leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return build_graph(leaves + 1, std::move(edges));
}

inline Graph make_petersen() {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 5; ++v) {
    edges.emplace_back(v, (v + 1) % 5);       // outer cycle
    edges.emplace_back(v, v + 5);             // spokes
    edges.emplace_back(v + 5, (v + 2) % 5 + 5);  // inner pentagram
  }
  return build_graph(10, std::move(edges));
}

// Erdos-style random graph: each pair kept independently with probability p.
inline Graph make_erdos(Vertex n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.real01() < p) edges.emplace_back(u, v);
    }
  }
  return build_graph(n, std::move(edges));
}

inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> masks(g.num_vertices(), 0);
  for (const auto& [u, v] : g.edges()) {
    masks[u] |= std::uint64_t{1} << v;
    masks[v] |= std::uint64_t{1} << u;
  }
  return masks;
}

// Independent oracle: exhaustive scan over all vertex subsets (n <= ~22).
inline std::size_t brute_force_mis_size(const Graph& g) {
  const auto masks = adjacency_masks(g);
  const Vertex n = g.num_vertices();
  std::size_t best = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    bool independent = true;
    for (Vertex v = 0; v < n && independent; ++v) {
      if ((subset >> v) & 1) independent = (masks[v] & subset) == 0;
    }
    if (independent) {
      const auto size = static_cast<std::size_t>(__builtin_popcountll(subset));
      if (size > best) best = size;
    }
  }
  return best;
}

// All independent sets of g as bitmasks (n <= ~22).
inline std::vector<std::uint64_t> enumerate_independent_sets(const Graph& g) {
  const auto masks = adjacency_masks(g);
  const Vertex n = g.num_vertices();
  std::vector<std::uint64_t> sets;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
    bool independent = true;
    for (Vertex v = 0; v < n && independent; ++v) {
      if ((subset >> v) & 1) independent = (masks[v] & subset) == 0;
    }
    if (independent) sets.push_back(subset);
  }
  return sets;
}

}  // namespace misbench::test
