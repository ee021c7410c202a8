#include "misbench/independent_set.hpp"

#include <sstream>

namespace misbench {

bool validate_is(const Graph& g, const IndependentSet& s) {
  std::vector<std::uint8_t> in_set(g.num_vertices(), 0);
  for (Vertex v : s.members) {
    if (v >= g.num_vertices()) {
      throw Error(errc::vertex_out_of_range, "member " + std::to_string(v) + " with n=" + std::to_string(g.num_vertices()));
    }
    in_set[v] = 1;
  }
  for (const auto& [u, v] : g.edges()) {
    if (in_set[u] && in_set[v]) return false;
  }
  return true;
}

std::string serialize_is(const IndependentSet& s) {
  std::ostringstream out;
  out << s.alpha() << ' ' << s.members.size() << '\n';
  for (Vertex v : s.members) out << v << '\n';
  return out.str();
}

}  // namespace misbench
