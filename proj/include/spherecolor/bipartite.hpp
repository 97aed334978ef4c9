#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <utility>
#include <variant>
#include <vector>

#include "spherecolor/poset.hpp"

namespace spherecolor {

/// BFS two-colouring of an undirected (multi)graph given as edge list.
/// Each component's smallest vertex gets colour 0. On failure returns an odd
/// closed walk (vertex sequence, first vertex not repeated); a loop yields a
/// one-vertex cycle.
struct Bipartition {
  std::vector<std::uint8_t> colors;
  std::vector<std::size_t> odd_cycle;
  bool ok() const noexcept { return odd_cycle.empty(); }
};

inline Bipartition bfs_bipartition(std::size_t n,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : edges) {
    if (a == b) return {{}, {a}};
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());

  Bipartition out;
  out.colors.assign(n, 0);
  std::vector<std::size_t> parent(n, npos);
  std::vector<std::size_t> depth(n, npos);
  for (std::size_t s = 0; s < n; ++s) {
    if (depth[s] != npos) continue;
    depth[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      for (auto w : adj[v]) {
        if (depth[w] == npos) {
          depth[w] = depth[v] + 1;
          parent[w] = v;
          out.colors[w] = out.colors[v] ^ 1;
          queue.push_back(w);
        } else if (out.colors[w] == out.colors[v]) {
          // Climb both tree paths to their meeting point.
          std::vector<std::size_t> left{v}, right{w};
          auto a = v, b = w;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          // v .. meet .. w, closed by the edge w-v.
          return {{}, left};
        }
      }
    }
  }
  return out;
}

}  // namespace spherecolor
