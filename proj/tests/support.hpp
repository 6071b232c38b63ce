#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "recon/graph.hpp"
#include "recon/matrix.hpp"
#include "recon/random.hpp"

namespace recon::testing {

inline RationalMatrix random_binary(std::size_t rows, std::size_t cols, Rng& rng,
                                    double density = 0.5) {
  std::bernoulli_distribution bit(density);
  RationalMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      a(r, c) = bit(rng) ? 1 : 0;
    }
  }
  return a;
}

/// Binary matrix whose entries are the bits of `code`, row-major.
inline RationalMatrix binary_from_bits(std::size_t rows, std::size_t cols, unsigned code) {
  RationalMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    a(i / cols, i % cols) = (code >> i) & 1U;
  }
  return a;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) {
    g.add_edge(v, (v + 1) % n);
  }
  return g;
}

/// Random labelled forest: each node v > 0 attaches to an earlier node with
/// probability `attach`.
inline Graph random_forest(std::size_t n, Rng& rng, double attach = 0.9) {
  Graph g(n);
  std::bernoulli_distribution keep(attach);
  for (std::size_t v = 1; v < n; ++v) {
    if (keep(rng)) {
      std::uniform_int_distribution<std::size_t> parent(0, v - 1);
      g.add_edge(v, parent(rng));
    }
  }
  return g;
}

/// Shortest simple cycle by exhaustive DFS over simple paths; small graphs only.
inline std::optional<std::size_t> brute_force_girth(const Graph& g) {
  std::optional<std::size_t> best;
  const std::size_t n = g.node_count();
  std::vector<bool> on_path(n, false);
  // Cycles are enumerated from their smallest node to avoid repeats.
  auto dfs = [&](auto&& self, NodeId start, NodeId v, std::size_t length) -> void {
    for (const auto u : g.adjacent(v)) {
      if (u == start && length >= 3) {
        if (!best || length < *best) {
          best = length;
        }
      } else if (u > start && !on_path[u]) {
        on_path[u] = true;
        self(self, start, u, length + 1);
        on_path[u] = false;
      }
    }
  };
  for (NodeId s = 0; s < n; ++s) {
    on_path[s] = true;
    dfs(dfs, s, s, 1);
    on_path[s] = false;
  }
  return best;
}

/// Shortest simple cycle through `v`, by the same exhaustive search.
inline std::optional<std::size_t> brute_force_cycle_through(const Graph& g, NodeId v) {
  std::optional<std::size_t> best;
  std::vector<bool> on_path(g.node_count(), false);
  auto dfs = [&](auto&& self, NodeId u, std::size_t length) -> void {
    for (const auto w : g.adjacent(u)) {
      if (w == v && length >= 3) {
        if (!best || length < *best) {
          best = length;
        }
      } else if (!on_path[w]) {
        on_path[w] = true;
        self(self, w, length + 1);
        on_path[w] = false;
      }
    }
  };
  on_path[v] = true;
  dfs(dfs, v, 1);
  return best;
}

/// Graph on n nodes whose edges are the bits of `code` over pairs in
/// lexicographic order.
inline Graph graph_from_bits(std::size_t n, unsigned long long code) {
  Graph g(n);
  std::size_t bit = 0;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v, ++bit) {
      if ((code >> bit) & 1ULL) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

}  // namespace recon::testing
