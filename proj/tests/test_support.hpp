#pragma once

// Fixtures, random instance generators and brute-force oracles shared by the
// unit and acceptance suites. Oracles here do not call into the code paths
// they check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spherecolor/spherecolor.hpp"

namespace spherecolor::testing {

inline std::string data_path(const std::string& name) { return std::string(SPHERECOLOR_DATA_DIR) + "/" + name; }

inline EmbeddedGraph load_graph_file(const std::string& name) { return load_graph(read_text_file(data_path(name))); }

// Triangle face poset: vertices a b c, edges ab bc ca, faces f_in f_out.
inline RankedPoset c3() {
  return build_poset({{"a", 0}, {"b", 0}, {"c", 0}, {"ab", 1}, {"bc", 1}, {"ca", 1}, {"f_in", 2}, {"f_out", 2}},
                     {{"a", "ab"}, {"b", "ab"}, {"b", "bc"}, {"c", "bc"}, {"c", "ca"}, {"a", "ca"},
                      {"ab", "f_in"}, {"bc", "f_in"}, {"ca", "f_in"},
                      {"ab", "f_out"}, {"bc", "f_out"}, {"ca", "f_out"}});
}

inline Matching c3_m0() { return Matching{{{"a", "ab"}, {"b", "bc"}, {"ca", "f_in"}}}; }

// Boundary complex of the dim-dimensional cross-polytope: all nonempty sets
// of signed axes without an antipodal pair. dim 3 is the octahedron, dim 4 the
// 16-cell.
inline RankedPoset cross_polytope(int dim) {
  std::vector<ElementSpec> elements;
  std::vector<CoverPair> covers;
  auto name = [](const std::vector<std::pair<int, int>>& s) {
    std::string out;
    for (auto [axis, sign] : s) out += (out.empty() ? "" : "-") + std::string(sign > 0 ? "p" : "m") + std::to_string(axis);
    return out;
  };
  // Each face: choose a sign in {-1, 0, +1} per axis, at least one nonzero.
  std::vector<int> code(static_cast<std::size_t>(dim), 0);
  std::function<void(int)> walk = [&](int axis) {
    if (axis == dim) {
      std::vector<std::pair<int, int>> s;
      for (int a = 0; a < dim; ++a)
        if (code[static_cast<std::size_t>(a)] != 0) s.emplace_back(a + 1, code[static_cast<std::size_t>(a)]);
      if (s.empty()) return;
      elements.push_back({name(s), static_cast<Rank>(s.size()) - 1});
      if (s.size() > 1) {
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          auto t = s;
          t.erase(t.begin() + static_cast<std::ptrdiff_t>(drop));
          covers.emplace_back(name(t), name(s));
        }
      }
      return;
    }
    for (int sign : {-1, 0, 1}) {
      code[static_cast<std::size_t>(axis)] = sign;
      walk(axis + 1);
    }
  };
  walk(0);
  return build_poset(std::move(elements), std::move(covers));
}

// Face poset of K4 (boundary of the tetrahedron).
inline RankedPoset tetrahedron() {
  const std::vector<std::string> v{"a", "b", "c", "d"};
  std::vector<ElementSpec> elements;
  std::vector<CoverPair> covers;
  for (const auto& x : v) elements.push_back({x, 0});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const auto e = v[i] + v[j];
      elements.push_back({e, 1});
      covers.emplace_back(v[i], e);
      covers.emplace_back(v[j], e);
    }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t k = j + 1; k < 4; ++k) {
        const auto f = v[i] + v[j] + v[k];
        elements.push_back({f, 2});
        covers.emplace_back(v[i] + v[j], f);
        covers.emplace_back(v[i] + v[k], f);
        covers.emplace_back(v[j] + v[k], f);
      }
  return build_poset(std::move(elements), std::move(covers));
}

// ---------------------------------------------------------------------------
// Random instances

using Rng = std::mt19937_64;

/// Ranked poset with at most max_elements elements and rank up to 3; every
/// element above rank 0 covers a nonempty random subset of the rank below.
inline RankedPoset random_poset(Rng& rng, std::size_t max_elements = 20) {
  std::uniform_int_distribution<std::size_t> total_dist(2, max_elements);
  const std::size_t total = total_dist(rng);
  std::uniform_int_distribution<int> top_dist(1, 3);
  const int top = std::min<int>(top_dist(rng), static_cast<int>(total) - 1);
  // Distribute sizes: at least one element per rank.
  std::vector<std::size_t> sizes(static_cast<std::size_t>(top) + 1, 1);
  std::uniform_int_distribution<std::size_t> pick(0, sizes.size() - 1);
  for (std::size_t extra = sizes.size(); extra < total; ++extra) ++sizes[pick(rng)];

  std::vector<ElementSpec> elements;
  std::vector<CoverPair> covers;
  std::vector<std::vector<std::string>> names(sizes.size());
  for (std::size_t r = 0; r < sizes.size(); ++r)
    for (std::size_t i = 0; i < sizes[r]; ++i) {
      names[r].push_back("r" + std::to_string(r) + "_" + std::to_string(i));
      elements.push_back({names[r].back(), static_cast<Rank>(r)});
    }
  std::bernoulli_distribution coin(0.45);
  for (std::size_t r = 1; r < sizes.size(); ++r)
    for (const auto& y : names[r]) {
      std::vector<std::string> below;
      for (const auto& x : names[r - 1])
        if (coin(rng)) below.push_back(x);
      if (below.empty()) {
        std::uniform_int_distribution<std::size_t> one(0, names[r - 1].size() - 1);
        below.push_back(names[r - 1][one(rng)]);
      }
      for (const auto& x : below) covers.emplace_back(x, y);
    }
  return build_poset(std::move(elements), std::move(covers));
}

/// Like random_poset, but every rank-(k-1) element is covered by exactly two
/// top-rank elements, so the top-rank adjacency graph is the graph whose
/// edges are the rank-(k-1) elements.
inline RankedPoset random_two_cover_poset(Rng& rng, std::size_t max_elements = 12) {
  for (;;) {
    const auto base = random_poset(rng, max_elements > 4 ? max_elements - 4 : 2);
    const Rank below = base.rank_of_poset();
    const auto lower = base.slice_ids(below);
    std::uniform_int_distribution<std::size_t> tops_dist(2, 5);
    const auto tops = tops_dist(rng);
    if (base.size() + tops > max_elements) continue;
    std::vector<ElementSpec> elements;
    std::vector<CoverPair> covers;
    for (std::size_t i = 0; i < base.size(); ++i) {
      elements.push_back({base.id(i), base.rank(i)});
      for (auto x : base.down(i)) covers.emplace_back(base.id(x), base.id(i));
    }
    std::vector<bool> used(tops, false);
    std::uniform_int_distribution<std::size_t> pick(0, tops - 1);
    std::vector<CoverPair> top_covers;
    for (const auto& x : lower) {
      const auto a = pick(rng);
      auto b = pick(rng);
      while (b == a) b = pick(rng);
      for (auto t : {a, b}) {
        used[t] = true;
        top_covers.emplace_back(x, "t" + std::to_string(t));
      }
    }
    for (std::size_t t = 0; t < tops; ++t)
      if (used[t]) elements.push_back({"t" + std::to_string(t), below + 1});
    covers.insert(covers.end(), top_covers.begin(), top_covers.end());
    return build_poset(std::move(elements), std::move(covers));
  }
}

/// Grows an acyclic matching by trying cover pairs in random order.
inline Matching random_acyclic_matching(const RankedPoset& p, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t y = 0; y < p.size(); ++y)
    for (auto x : p.down(y)) covers.emplace_back(x, y);
  std::shuffle(covers.begin(), covers.end(), rng);
  MateTable table(p.size());
  for (auto [x, y] : covers) {
    if (table.matched(x) || table.matched(y)) continue;
    table.pair(x, y);
    if (!is_acyclic(p, table)) table.unpair(x);
  }
  return to_matching(p, table);
}

/// Face poset F(T) of a uniformly random labelled tree (random parent rule).
inline RankedPoset random_tree_poset(Rng& rng, std::size_t vertices) {
  std::vector<ElementSpec> elements;
  std::vector<CoverPair> covers;
  for (std::size_t v = 0; v < vertices; ++v) elements.push_back({"v" + std::to_string(v), 0});
  for (std::size_t v = 1; v < vertices; ++v) {
    std::uniform_int_distribution<std::size_t> parent(0, v - 1);
    const auto u = parent(rng);
    const auto e = "e" + std::to_string(u) + "_" + std::to_string(v);
    elements.push_back({e, 1});
    covers.emplace_back("v" + std::to_string(u), e);
    covers.emplace_back("v" + std::to_string(v), e);
  }
  return build_poset(std::move(elements), std::move(covers));
}

/// Stacked triangulation on n >= 3 vertices as neighbour rotations. Inserting
/// x into face u->v->w puts x after u at v, after v at w, after w at u, and
/// gives x the rotation (v, u, w).
inline std::vector<std::vector<std::size_t>> random_triangulation(Rng& rng, std::size_t n) {
  std::vector<std::vector<std::size_t>> rot{{1, 2}, {2, 0}, {0, 1}};
  std::vector<std::array<std::size_t, 3>> faces{{0, 1, 2}, {0, 2, 1}};
  auto insert_after = [&](std::size_t at, std::size_t after, std::size_t x) {
    auto& r = rot[at];
    r.insert(std::find(r.begin(), r.end(), after) + 1, x);
  };
  for (std::size_t x = 3; x < n; ++x) {
    std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
    const auto f = pick(rng);
    const auto [u, v, w] = faces[f];
    insert_after(v, u, x);
    insert_after(w, v, x);
    insert_after(u, w, x);
    rot.push_back({v, u, w});
    faces[f] = {u, v, x};
    faces.push_back({v, w, x});
    faces.push_back({w, u, x});
  }
  return rot;
}

/// Embedded graph from neighbour rotations restricted to `keep` edges
/// (unordered vertex pairs). Vertices without kept edges are dropped.
inline EmbeddedGraph graph_from_rotations(const std::vector<std::vector<std::size_t>>& rot,
                                          const std::set<std::pair<std::size_t, std::size_t>>& keep) {
  auto vname = [](std::size_t v) { return "v" + std::string(v < 10 ? "0" : "") + std::to_string(v); };
  auto ename = [&](std::size_t a, std::size_t b) {
    return "e" + vname(std::min(a, b)).substr(1) + "_" + vname(std::max(a, b)).substr(1);
  };
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> rotations;
  std::vector<GraphEdge> edges;
  for (std::size_t v = 0; v < rot.size(); ++v) {
    std::vector<std::string> r;
    for (auto w : rot[v])
      if (keep.count({std::min(v, w), std::max(v, w)})) r.push_back(ename(v, w));
    if (r.empty()) continue;
    vertices.push_back(vname(v));
    rotations.push_back(std::move(r));
  }
  for (auto [a, b] : keep) edges.push_back({ename(a, b), vname(a), vname(b)});
  return make_graph(std::move(vertices), std::move(rotations), std::move(edges));
}

inline EmbeddedGraph random_planar_triangulation(Rng& rng, std::size_t n) {
  const auto rot = random_triangulation(rng, n);
  std::set<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t v = 0; v < rot.size(); ++v)
    for (auto w : rot[v]) all.emplace(std::min(v, w), std::max(v, w));
  return graph_from_rotations(rot, all);
}

/// Connected Eulerian planar graph with at most max_vertices vertices: the
/// symmetric difference of random triangle boundaries of a stacked
/// triangulation, restricted to one connected component.
inline EmbeddedGraph random_eulerian_planar_once(Rng& rng, std::size_t max_vertices) {
  std::uniform_int_distribution<std::size_t> size_dist(3, max_vertices);
  for (;;) {
    const auto n = size_dist(rng);
    const auto rot = random_triangulation(rng, n);
    // Enumerate triangular faces by the same successor rule as face tracing.
    std::set<std::pair<std::size_t, std::size_t>> used;
    std::vector<std::array<std::size_t, 3>> faces;
    for (std::size_t u = 0; u < rot.size(); ++u)
      for (auto v : rot[u]) {
        if (used.count({u, v})) continue;
        std::array<std::size_t, 3> f{};
        auto a = u, b = v;
        for (int i = 0; i < 3; ++i) {
          used.emplace(a, b);
          f[static_cast<std::size_t>(i)] = a;
          const auto& rb = rot[b];
          const auto c = rb[(static_cast<std::size_t>(std::find(rb.begin(), rb.end(), a) - rb.begin()) + 1) % rb.size()];
          a = b;
          b = c;
        }
        faces.push_back(f);
      }
    std::bernoulli_distribution coin(0.5);
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& f : faces) {
      if (!coin(rng)) continue;
      for (int i = 0; i < 3; ++i) {
        const auto a = f[static_cast<std::size_t>(i)], b = f[static_cast<std::size_t>((i + 1) % 3)];
        const std::pair<std::size_t, std::size_t> e{std::min(a, b), std::max(a, b)};
        if (!edges.erase(e)) edges.insert(e);
      }
    }
    if (edges.empty()) continue;
    // Keep the component with the most edges.
    std::map<std::size_t, std::size_t> parent;
    std::function<std::size_t(std::size_t)> root = [&](std::size_t v) {
      auto it = parent.try_emplace(v, v).first;
      return it->second == v ? v : it->second = root(it->second);
    };
    for (auto [a, b] : edges) parent[root(a)] = root(b);
    std::map<std::size_t, std::size_t> size;
    for (auto [a, b] : edges) ++size[root(a)];
    const auto best = std::max_element(size.begin(), size.end(), [](const auto& x, const auto& y) {
                        return x.second < y.second;
                      })->first;
    std::set<std::pair<std::size_t, std::size_t>> keep;
    for (auto e : edges)
      if (root(e.first) == best) keep.insert(e);
    return graph_from_rotations(rot, keep);
  }
}

/// Best of a few draws by face count, so small graphs do not dominate.
inline EmbeddedGraph random_eulerian_planar(Rng& rng, std::size_t max_vertices = 14) {
  auto best = random_eulerian_planar_once(rng, max_vertices);
  auto faces = best.edge_count() - best.vertex_count();
  for (int draw = 1; draw < 4; ++draw) {
    auto g = random_eulerian_planar_once(rng, max_vertices);
    if (g.edge_count() - g.vertex_count() > faces) {
      faces = g.edge_count() - g.vertex_count();
      best = std::move(g);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Oracles

/// Brute-force M-path enumeration straight from the definition, on ids.
struct MPathCensus {
  std::map<std::pair<ElementId, ElementId>, std::size_t> counts;  // (init, term) -> #paths
  bool closed = false;                                           // a non-trivial closed path exists
};

inline MPathCensus enumerate_mpaths(const RankedPoset& p, const Matching& m) {
  std::map<ElementId, ElementId> up_mate;  // lower -> upper
  for (const auto& [lo, hi] : m.pairs) up_mate[lo] = hi;
  MPathCensus census;
  const std::size_t bound = p.size();
  for (std::size_t s = 0; s < p.size(); ++s) {
    const auto& start = p.id(s);
    std::function<void(const ElementId&, std::size_t)> extend = [&](const ElementId& y, std::size_t steps) {
      ++census.counts[{start, y}];
      if (steps > 0 && y == start) census.closed = true;
      if (steps >= bound) return;
      for (const auto& x : delta(p, y)) {
        auto it = up_mate.find(x);
        if (it == up_mate.end() || it->second == y) continue;
        extend(it->second, steps + 1);
      }
    };
    extend(start, 0);
  }
  return census;
}

/// All assignments x in GF(2)^cols with A x = b, by enumeration.
inline std::vector<std::vector<int>> brute_force_solutions(const std::vector<std::vector<int>>& a,
                                                           const std::vector<int>& b, std::size_t cols) {
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cols); ++mask) {
    bool ok = true;
    for (std::size_t r = 0; r < a.size() && ok; ++r) {
      int s = 0;
      for (std::size_t c = 0; c < cols; ++c) s ^= a[r][c] & static_cast<int>((mask >> c) & 1U);
      ok = s == b[r];
    }
    if (ok) {
      std::vector<int> x(cols);
      for (std::size_t c = 0; c < cols; ++c) x[c] = static_cast<int>((mask >> c) & 1U);
      out.push_back(x);
    }
  }
  return out;
}

/// a and b agree or are complementary on each connected component of the
/// top-rank adjacency graph (components found by a plain flood fill).
inline bool same_up_to_complement(const RankedPoset& p, const Coloring& a, const Coloring& b) {
  const Rank k = p.rank_of_poset();
  std::map<ElementId, std::set<ElementId>> adj;
  for (const auto& id : p.slice_ids(k)) adj[id];
  for (const auto& [x, y] : adjacent_pairs(p, k)) {
    adj[x].insert(y);
    adj[y].insert(x);
  }
  std::set<ElementId> seen;
  for (const auto& [root, _] : adj) {
    if (seen.count(root)) continue;
    const int diff = a.psi.at(root) ^ b.psi.at(root);
    std::vector<ElementId> stack{root};
    seen.insert(root);
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      if ((a.psi.at(v) ^ b.psi.at(v)) != diff) return false;
      for (const auto& w : adj[v])
        if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return true;
}

/// Direct definition check of a proper colouring: any two top-rank elements
/// sharing a covered element get different colours.
inline bool proper_by_definition(const RankedPoset& p, const Coloring& c) {
  const Rank k = p.rank_of_poset();
  const auto top = p.slice_ids(k);
  for (std::size_t i = 0; i < top.size(); ++i)
    for (std::size_t j = i + 1; j < top.size(); ++j) {
      const auto di = delta(p, top[i]);
      const auto dj = delta(p, top[j]);
      const bool share = std::any_of(di.begin(), di.end(),
                                     [&](const auto& z) { return std::find(dj.begin(), dj.end(), z) != dj.end(); });
      if (share && c.psi.at(top[i]) == c.psi.at(top[j])) return false;
    }
  return true;
}

}  // namespace spherecolor::testing
