#pragma once

#include <string>
#include <vector>

#include "misbench/graph.hpp"

namespace misbench {

// A vertex subset with no two members adjacent. Members are kept sorted
// ascending; alpha() is the set size the whole suite reports on.
struct IndependentSet {
  std::vector<Vertex> members;

  std::size_t alpha() const { return members.size(); }
};

// True iff no edge of g has both endpoints in s. Linear in |edges|.
bool validate_is(const Graph& g, const IndependentSet& s);

// "alpha k" header then k sorted vertex ids, one per line.
std::string serialize_is(const IndependentSet& s);

}  // namespace misbench
