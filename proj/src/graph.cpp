#include "misbench/graph.hpp"

#include <algorithm>
#include <sstream>

#include "misbench/memory.hpp"

namespace misbench {

Graph::Graph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u >= n_ || v >= n_) {
      throw Error(errc::vertex_out_of_range,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n_));
    }
    if (u == v) {
      throw Error(errc::self_loop, "vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i] == edges_[i - 1]) {
      throw Error(errc::duplicate_edge,
                  "(" + std::to_string(edges_[i].first) + "," + std::to_string(edges_[i].second) + ")");
    }
  }

  offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (Vertex v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];

  adjacency_.resize(2 * edges_.size());
  advise_huge_pages(adjacency_.data(), adjacency_.size() * sizeof(Vertex));
  advise_huge_pages(offsets_.data(), offsets_.size() * sizeof(std::uint64_t));
  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges_) {
    adjacency_[cursor[u]++] = v;
    adjacency_[cursor[v]++] = u;
  }
  // Edges are sorted by (min,max), so each vertex's neighbors greater than
  // itself arrive in order, but smaller neighbors interleave; sort per vertex.
  for (Vertex v = 0; v < n_; ++v) {
    std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

Vertex Graph::max_degree() const {
  Vertex best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

Graph build_graph(Vertex n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

ValidationReport validate_graph(const Graph& g, std::optional<Vertex> expected_degree) {
  ValidationReport report;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (nbrs[i] == v) report.is_simple = false;
      if (i > 0 && nbrs[i] <= nbrs[i - 1]) report.is_simple = false;
    }
    ++report.degree_histogram[g.degree(v)];
  }
  if (g.num_vertices() > 0 && report.degree_histogram.size() == 1) {
    report.regular_degree = report.degree_histogram.begin()->first;
  }
  if (expected_degree) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) != *expected_degree) report.deviating_vertices.push_back(v);
    }
    if (!report.deviating_vertices.empty()) report.regular_degree.reset();
  }
  return report;
}

namespace {

bool next_content_line(std::istream& in, std::string& line, bool skip_comments) {
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (skip_comments && line[0] == 'c') continue;
    return true;
  }
  return false;
}

// Parses exactly `count` unsigned fields and rejects trailing garbage.
bool parse_fields(const std::string& line, std::uint64_t* out, int count, std::size_t start = 0) {
  std::istringstream ss(line.substr(start));
  for (int i = 0; i < count; ++i) {
    if (!(ss >> out[i])) return false;
  }
  std::string rest;
  if (ss >> rest) return false;
  return true;
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line, false)) {
    throw Error(errc::malformed_header, "empty input");
  }
  std::uint64_t header[2];
  if (!parse_fields(line, header, 2)) {
    throw Error(errc::malformed_header, "expected \"n m\", got \"" + line + "\"");
  }
  const auto n = header[0];
  const auto m = header[1];
  std::vector<Edge> edges;
  edges.reserve(m);
  while (next_content_line(in, line, false)) {
    std::uint64_t uv[2];
    if (!parse_fields(line, uv, 2)) {
      throw Error(errc::malformed_header, "bad edge line \"" + line + "\"");
    }
    if (uv[0] >= n || uv[1] >= n) {
      throw Error(errc::vertex_out_of_range, "edge line \"" + line + "\" with n=" + std::to_string(n));
    }
    edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
  }
  if (edges.size() != m) {
    throw Error(errc::edge_count_mismatch,
                "header says " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<Vertex>(n), std::move(edges));
}

Graph parse_dimacs(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line, true)) {
    throw Error(errc::malformed_header, "empty input");
  }
  std::uint64_t header[2];
  if (line.rfind("p edge", 0) != 0 || !parse_fields(line, header, 2, 6)) {
    throw Error(errc::malformed_header, "expected \"p edge n m\", got \"" + line + "\"");
  }
  const auto n = header[0];
  const auto m = header[1];
  std::vector<Edge> edges;
  edges.reserve(m);
  while (next_content_line(in, line, true)) {
    std::uint64_t uv[2];
    if (line.rfind("e ", 0) != 0 || !parse_fields(line, uv, 2, 2)) {
      throw Error(errc::malformed_header, "bad edge line \"" + line + "\"");
    }
    if (uv[0] < 1 || uv[1] < 1 || uv[0] > n || uv[1] > n) {
      throw Error(errc::vertex_out_of_range, "edge line \"" + line + "\" with n=" + std::to_string(n));
    }
    edges.emplace_back(static_cast<Vertex>(uv[0] - 1), static_cast<Vertex>(uv[1] - 1));
  }
  if (edges.size() != m) {
    throw Error(errc::edge_count_mismatch,
                "header says " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<Vertex>(n), std::move(edges));
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
  switch (format) {
    case GraphFormat::edge_list: return parse_edge_list(in);
    case GraphFormat::dimacs: return parse_dimacs(in);
  }
  throw Error(errc::unknown_format, "unrecognized graph format");
}

Graph parse_graph(const std::string& text, GraphFormat format) {
  std::istringstream in(text);
  return parse_graph(in, format);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  switch (format) {
    case GraphFormat::edge_list:
      out << g.num_vertices() << ' ' << g.num_edges() << '\n';
      for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
      return out.str();
    case GraphFormat::dimacs:
      out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
      for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
      return out.str();
  }
  throw Error(errc::unknown_format, "unrecognized graph format");
}

}  // namespace misbench
