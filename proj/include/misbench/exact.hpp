#pragma once

#include "misbench/graph.hpp"
#include "misbench/independent_set.hpp"

namespace misbench {

inline constexpr Vertex kExactMisLimit = 40;

// Branch-and-bound oracle for small instances (n <= 40). Branches on the
// highest-residual-degree vertex, exclude branch first; bound is current size
// plus the number of unassigned vertices. Exponential worst case.
IndependentSet exact_mis(const Graph& g);

}  // namespace misbench
