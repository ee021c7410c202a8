#pragma once

#include <cstdint>
#include <vector>

#include "misbench/graph.hpp"

namespace misbench {

// How a random regular graph is drawn.
//
// `restart` is the configuration model conditioned on simplicity by redrawing
// the whole stub matching whenever a self-loop or multi-edge appears. That is
// exactly uniform over labeled simple d-regular graphs, but its acceptance
// probability falls like exp(-(d*d-1)/4), so it is only usable for small d.
//
// `pairing` adds edges one at a time between random stubs, rejecting illegal
// pairs and restarting only when no legal pair is left (Steger-Wormald).
// Asymptotically uniform, and the standard choice for the dense-degree
// benchmark regime (d = 20, 100) where restart conditioning cannot terminate.
//
// `automatic` picks restart for d <= 5 and pairing above that; the resolved
// method id travels with every benchmark record.
enum class RrgMethod { automatic, restart, pairing };

struct RrgParams {
  Vertex n = 0;
  Vertex d = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_restarts = 1000000;
  RrgMethod method = RrgMethod::automatic;
};

RrgMethod resolve_rrg_method(const RrgParams& params);
const char* rrg_method_id(RrgMethod method);          // resolved methods only
RrgMethod rrg_method_from_id(const std::string& id);  // accepts "auto" too

// Draws a simple d-regular graph on n vertices, deterministic given the seed.
Graph sample_rrg(const RrgParams& params);

// Complete list of distinct labeled simple d-regular graphs on n vertices
// (n <= 12), in a fixed canonical order. Serves as the uniformity oracle for
// sample_rrg.
std::vector<Graph> enumerate_regular(Vertex n, Vertex d);

}  // namespace misbench
