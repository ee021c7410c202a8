#include "misbench/rrg.hpp"

#include <algorithm>
#include <bit>

#include "misbench/rng.hpp"

namespace misbench {

namespace {

// Open-addressing set of edge keys with O(1) reset via epoch stamping; the
// samplers clear it once per restart.
class EdgeKeySet {
 public:
  explicit EdgeKeySet(std::size_t expected_edges) {
    std::size_t cap = std::bit_ceil(std::max<std::size_t>(16, expected_edges * 2));
    mask_ = cap - 1;
    keys_.resize(cap);
    epochs_.resize(cap, 0);
  }

  void clear() { ++epoch_; }

  // Returns false if the key was already present.
  bool insert(std::uint64_t key) {
    std::size_t i = hash(key) & mask_;
    while (epochs_[i] == epoch_) {
      if (keys_[i] == key) return false;
      i = (i + 1) & mask_;
    }
    keys_[i] = key;
    epochs_[i] = epoch_;
    return true;
  }

  bool contains(std::uint64_t key) const {
    std::size_t i = hash(key) & mask_;
    while (epochs_[i] == epoch_) {
      if (keys_[i] == key) return true;
      i = (i + 1) & mask_;
    }
    return false;
  }

 private:
  static std::uint64_t hash(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> epochs_;
  std::uint32_t epoch_ = 1;
  std::size_t mask_;
};

std::uint64_t edge_key(Vertex n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return static_cast<std::uint64_t>(u) * n + v;
}

void refill_stubs(std::vector<Vertex>& stubs, Vertex n, Vertex d) {
  stubs.resize(static_cast<std::size_t>(n) * d);
  std::size_t i = 0;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex k = 0; k < d; ++k) stubs[i++] = v;
  }
}

void check_params(const RrgParams& p) {
  if (p.n == 0 || p.d == 0) {
    throw Error(errc::invalid_parameter, "need n >= 1 and d >= 1");
  }
  if (p.d >= p.n) {
    throw Error(errc::degree_too_large, "d=" + std::to_string(p.d) + " with n=" + std::to_string(p.n));
  }
  if ((static_cast<std::uint64_t>(p.n) * p.d) % 2 != 0) {
    throw Error(errc::infeasible_parity, "n*d = " + std::to_string(static_cast<std::uint64_t>(p.n) * p.d) + " is odd");
  }
}

// Uniform stub matching, rejected wholesale on the first collision.
Graph sample_restart(const RrgParams& p, Rng& rng) {
  const std::size_t num_edges = static_cast<std::size_t>(p.n) * p.d / 2;
  std::vector<Vertex> stubs;
  std::vector<Edge> edges;
  edges.reserve(num_edges);
  EdgeKeySet seen(num_edges);

  for (std::uint64_t attempt = 0; attempt <= p.max_restarts; ++attempt) {
    refill_stubs(stubs, p.n, p.d);
    edges.clear();
    seen.clear();
    std::size_t live = stubs.size();
    bool ok = true;
    while (live > 0) {
      // Partner for the last live stub, uniform among the others.
      const std::size_t j = static_cast<std::size_t>(rng.below(live - 1));
      const Vertex u = stubs[live - 1];
      const Vertex v = stubs[j];
      if (u == v || !seen.insert(edge_key(p.n, u, v))) {
        ok = false;
        break;
      }
      edges.emplace_back(u, v);
      stubs[j] = stubs[live - 2];
      live -= 2;
    }
    if (ok) return Graph(p.n, std::move(edges));
  }
  throw Error(errc::restart_limit_exceeded,
              "configuration model produced no simple graph in " + std::to_string(p.max_restarts) +
                  " restarts (n=" + std::to_string(p.n) + ", d=" + std::to_string(p.d) +
                  "); for d >= 6 use the pairing method");
}

// Degree-constrained pairing: grow the edge set stub pair by stub pair,
// redrawing illegal pairs, restarting only when no legal pair remains.
Graph sample_pairing(const RrgParams& p, Rng& rng) {
  const std::size_t num_edges = static_cast<std::size_t>(p.n) * p.d / 2;
  std::vector<Vertex> stubs;
  std::vector<Edge> edges;
  edges.reserve(num_edges);
  EdgeKeySet seen(num_edges);
  constexpr int kFailsBeforeScan = 64;

  for (std::uint64_t attempt = 0; attempt <= p.max_restarts; ++attempt) {
    refill_stubs(stubs, p.n, p.d);
    edges.clear();
    seen.clear();
    std::size_t live = stubs.size();
    bool stuck = false;

    auto remove_pair = [&](std::size_t a, std::size_t b) {
      // a > b; slot a takes the last live stub, then slot b the one before it.
      if (a != live - 1) stubs[a] = stubs[live - 1];
      if (b != live - 2) stubs[b] = stubs[live - 2];
      live -= 2;
    };

    while (live > 0 && !stuck) {
      int fails = 0;
      for (;;) {
        std::size_t i = static_cast<std::size_t>(rng.below(live));
        std::size_t j = static_cast<std::size_t>(rng.below(live - 1));
        if (j >= i) ++j;
        const Vertex u = stubs[i];
        const Vertex v = stubs[j];
        if (u != v && seen.insert(edge_key(p.n, u, v))) {
          edges.emplace_back(u, v);
          remove_pair(std::max(i, j), std::min(i, j));
          break;
        }
        if (++fails >= kFailsBeforeScan) {
          // Count legal pairs; bail out if the endgame is blocked, otherwise
          // pick one uniformly so the loop cannot stall.
          std::size_t legal = 0;
          for (std::size_t a = 0; a + 1 < live; ++a) {
            for (std::size_t b = a + 1; b < live; ++b) {
              if (stubs[a] != stubs[b] && !seen.contains(edge_key(p.n, stubs[a], stubs[b]))) ++legal;
            }
          }
          if (legal == 0) {
            stuck = true;
            break;
          }
          std::size_t target = static_cast<std::size_t>(rng.below(legal));
          for (std::size_t a = 0; a + 1 < live; ++a) {
            bool done = false;
            for (std::size_t b = a + 1; b < live; ++b) {
              if (stubs[a] != stubs[b] && !seen.contains(edge_key(p.n, stubs[a], stubs[b]))) {
                if (target-- == 0) {
                  seen.insert(edge_key(p.n, stubs[a], stubs[b]));
                  edges.emplace_back(stubs[a], stubs[b]);
                  remove_pair(b, a);
                  done = true;
                  break;
                }
              }
            }
            if (done) break;
          }
          break;
        }
      }
    }
    if (!stuck && live == 0) return Graph(p.n, std::move(edges));
  }
  throw Error(errc::restart_limit_exceeded,
              "pairing sampler restarted " + std::to_string(p.max_restarts) + " times (n=" + std::to_string(p.n) +
                  ", d=" + std::to_string(p.d) + "); this regime needs d well below n");
}

}  // namespace

RrgMethod resolve_rrg_method(const RrgParams& params) {
  if (params.method != RrgMethod::automatic) return params.method;
  return params.d <= 5 ? RrgMethod::restart : RrgMethod::pairing;
}

const char* rrg_method_id(RrgMethod method) {
  switch (method) {
    case RrgMethod::restart: return "config-restart";
    case RrgMethod::pairing: return "pairing";
    case RrgMethod::automatic: return "auto";
  }
  return "unknown";
}

RrgMethod rrg_method_from_id(const std::string& id) {
  if (id == "auto" || id == "automatic") return RrgMethod::automatic;
  if (id == "config-restart" || id == "restart") return RrgMethod::restart;
  if (id == "pairing") return RrgMethod::pairing;
  throw Error(errc::invalid_parameter, "unknown rrg method \"" + id + "\"");
}

Graph sample_rrg(const RrgParams& params) {
  check_params(params);
  Rng rng(params.seed);
  switch (resolve_rrg_method(params)) {
    case RrgMethod::restart: return sample_restart(params, rng);
    case RrgMethod::pairing: return sample_pairing(params, rng);
    default: break;
  }
  throw Error(errc::invalid_parameter, "unresolved rrg method");
}

namespace {

void enumerate_rec(Vertex n, Vertex d, std::vector<Vertex>& needed, std::vector<std::uint8_t>& adjacent,
                   std::vector<Edge>& edges, std::vector<Graph>& out) {
  Vertex u = n;
  for (Vertex v = 0; v < n; ++v) {
    if (needed[v] > 0) {
      u = v;
      break;
    }
  }
  if (u == n) {
    out.push_back(Graph(n, edges));
    return;
  }

  // All vertices below u are saturated, so u's missing neighbors lie above it.
  std::vector<Vertex> candidates;
  for (Vertex w = u + 1; w < n; ++w) {
    if (needed[w] > 0 && !adjacent[u * n + w]) candidates.push_back(w);
  }
  const Vertex want = needed[u];
  if (candidates.size() < want) return;

  std::vector<Vertex> chosen;
  auto choose = [&](auto&& self, std::size_t start) -> void {
    if (chosen.size() == want) {
      for (Vertex w : chosen) {
        edges.emplace_back(u, w);
        adjacent[u * n + w] = adjacent[w * n + u] = 1;
        --needed[w];
      }
      needed[u] = 0;
      enumerate_rec(n, d, needed, adjacent, edges, out);
      needed[u] = want;
      for (Vertex w : chosen) {
        edges.pop_back();
        adjacent[u * n + w] = adjacent[w * n + u] = 0;
        ++needed[w];
      }
      return;
    }
    for (std::size_t i = start; i + (want - chosen.size()) <= candidates.size(); ++i) {
      chosen.push_back(candidates[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  choose(choose, 0);
}

}  // namespace

std::vector<Graph> enumerate_regular(Vertex n, Vertex d) {
  if (n > 12) {
    throw Error(errc::too_large, "enumerate_regular supports n <= 12, got n=" + std::to_string(n));
  }
  if ((static_cast<std::uint64_t>(n) * d) % 2 != 0) {
    throw Error(errc::infeasible_parity, "n*d = " + std::to_string(static_cast<std::uint64_t>(n) * d) + " is odd");
  }
  std::vector<Graph> out;
  if (d >= n && d > 0) return out;  // no simple d-regular graph exists
  std::vector<Vertex> needed(n, d);
  std::vector<std::uint8_t> adjacent(static_cast<std::size_t>(n) * n, 0);
  std::vector<Edge> edges;
  enumerate_rec(n, d, needed, adjacent, edges, out);
  return out;
}

}  // namespace misbench
