#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "misbench/errors.hpp"

namespace misbench {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;  // canonical form keeps first < second

// Immutable simple undirected graph in compressed adjacency form.
//
// Canonical form: the edge list is stored with u < v per pair and sorted
// ascending, and every neighbor list is sorted ascending. This makes
// serialization byte-deterministic and equality structural. Construction
// validates the input: self-loops, duplicate edges and out-of-range endpoints
// are errors, never silently repaired. Instances are immutable afterwards and
// safe to share across threads.
class Graph {
 public:
  Graph() = default;
  Graph(Vertex n, std::vector<Edge> edges);

  Vertex num_vertices() const { return n_; }
  std::uint64_t num_edges() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  Vertex degree(Vertex v) const { return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]); }

  void prefetch_neighbors(Vertex v) const { __builtin_prefetch(&offsets_[v]); }

  Vertex max_degree() const;

  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> offsets_ = {0};  // size n_+1
  std::vector<Vertex> adjacency_;             // flat, per-vertex sorted
};

struct ValidationReport {
  bool is_simple = true;
  std::optional<Vertex> regular_degree;          // set iff all degrees equal
  std::map<Vertex, std::uint64_t> degree_histogram;
  std::vector<Vertex> deviating_vertices;        // vs expected_degree, when given
};

enum class GraphFormat { edge_list, dimacs };

Graph build_graph(Vertex n, std::vector<Edge> edges);

ValidationReport validate_graph(const Graph& g, std::optional<Vertex> expected_degree = std::nullopt);

// Edge-list format: "n m" header then m lines "u v", 0-indexed.
// DIMACS format: "c" comments, "p edge n m" header, "e u v" lines, 1-indexed.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(const std::string& text, GraphFormat format);

std::string serialize_graph(const Graph& g, GraphFormat format);

}  // namespace misbench
