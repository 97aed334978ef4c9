#pragma once

// Matchings on the directed Hasse diagram, acyclicity, critical cells and
// M-path parities.
//
// An M-path at rank q is y0 > x1 >-> y1 > ... > xr >-> yr, where every
// (xi, yi) is a matched pair and y(i-1) != yi covers xi. Between two fixed
// consecutive y's the witness x is the matched partner below the later y, so
// M-paths are exactly directed paths in a simple DAG on the rank-q slice.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <utility>
#include <set>
#include <string>
#include <vector>

#include "spherecolor/poset.hpp"

namespace spherecolor {

struct Matching {
  std::vector<CoverPair> pairs;  // (lower, upper)

  bool empty() const noexcept { return pairs.empty(); }
  std::size_t size() const noexcept { return pairs.size(); }

  /// Copy with pairs sorted by (lower, upper) id.
  Matching normalized() const {
    Matching m{pairs};
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
  }

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.normalized().pairs == b.normalized().pairs;
  }
};

/// Index form of a validated matching: mate[i] is i's partner or npos.
class MateTable {
 public:
  explicit MateTable(std::size_t n = 0) : mate_(n, npos) {}

  std::size_t mate(std::size_t i) const { return mate_.at(i); }
  bool matched(std::size_t i) const { return mate_.at(i) != npos; }

  void pair(std::size_t lower, std::size_t upper) {
    mate_.at(lower) = upper;
    mate_.at(upper) = lower;
  }
  void unpair(std::size_t i) {
    auto m = mate_.at(i);
    if (m == npos) return;
    mate_[m] = npos;
    mate_[i] = npos;
  }

  std::size_t size() const noexcept { return mate_.size(); }

 private:
  std::vector<std::size_t> mate_;
};

/// Throws NotACover, ElementReused or UnknownElement.
inline MateTable bind_matching(const RankedPoset& p, const Matching& m) {
  MateTable table(p.size());
  for (const auto& [lo_id, hi_id] : m.pairs) {
    const auto lo = p.index_of(lo_id);
    const auto hi = p.index_of(hi_id);
    if (!p.covers(lo, hi)) {
      throw Error(ErrorKind::NotACover, "'" + hi_id + "' does not cover '" + lo_id + "'");
    }
    if (table.matched(lo)) throw Error(ErrorKind::ElementReused, "'" + lo_id + "'");
    if (table.matched(hi)) throw Error(ErrorKind::ElementReused, "'" + hi_id + "'");
    table.pair(lo, hi);
  }
  return table;
}

inline void validate_matching(const RankedPoset& p, const Matching& m) { (void)bind_matching(p, m); }

inline Matching to_matching(const RankedPoset& p, const MateTable& table) {
  Matching m;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto j = table.mate(i);
    if (j != npos && p.rank(i) < p.rank(j)) m.pairs.emplace_back(p.id(i), p.id(j));
  }
  return m.normalized();
}

/// Modified Hasse digraph: cover edges point down, matched edges point up.
/// Kahn's algorithm; true iff every element gets a topological position.
inline bool is_acyclic(const RankedPoset& p, const MateTable& table) {
  const std::size_t n = p.size();
  std::vector<std::size_t> indegree(n, 0);
  auto for_each_successor = [&](std::size_t v, auto&& f) {
    for (auto z : p.down(v))
      if (table.mate(v) != z) f(z);
    const auto w = table.mate(v);
    if (w != npos && p.rank(w) > p.rank(v)) f(w);
  };
  for (std::size_t v = 0; v < n; ++v) for_each_successor(v, [&](std::size_t w) { ++indegree[w]; });
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t visited = 0;
  while (!ready.empty()) {
    const auto v = ready.back();
    ready.pop_back();
    ++visited;
    for_each_successor(v, [&](std::size_t w) {
      if (--indegree[w] == 0) ready.push_back(w);
    });
  }
  return visited == n;
}

inline bool is_acyclic(const RankedPoset& p, const Matching& m) {
  return is_acyclic(p, bind_matching(p, m));
}

/// A directed cycle of the modified Hasse digraph, as element ids in cycle
/// order, or empty when the matching is acyclic. Such a cycle alternates
/// between two adjacent ranks and reads as a non-trivial closed M-path.
inline std::vector<ElementId> find_closed_mpath(const RankedPoset& p, const MateTable& table) {
  const std::size_t n = p.size();
  auto successors = [&](std::size_t v) {
    std::vector<std::size_t> out;
    for (auto z : p.down(v))
      if (table.mate(v) != z) out.push_back(z);
    const auto w = table.mate(v);
    if (w != npos && p.rank(w) > p.rank(v)) out.push_back(w);
    return out;
  };
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> state(n, kWhite);
  std::vector<std::size_t> parent(n, npos);
  for (std::size_t s = 0; s < n; ++s) {
    if (state[s] != kWhite) continue;
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> stack;
    stack.emplace_back(s, successors(s));
    state[s] = kGrey;
    while (!stack.empty()) {
      auto& [v, pending] = stack.back();
      if (pending.empty()) {
        state[v] = kBlack;
        stack.pop_back();
        continue;
      }
      const auto w = pending.back();
      pending.pop_back();
      if (state[w] == kGrey) {
        std::vector<ElementId> cycle;
        for (auto u = v; u != w; u = parent[u]) cycle.push_back(p.id(u));
        cycle.push_back(p.id(w));
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      if (state[w] == kWhite) {
        state[w] = kGrey;
        parent[w] = v;
        stack.emplace_back(w, successors(w));
      }
    }
  }
  return {};
}

struct MorseClassification {
  Rank q = 0;
  std::vector<ElementId> crit;
  std::vector<ElementId> up;    // lower element of a pair, at rank q
  std::vector<ElementId> down;  // upper element of a pair, at rank q
};

inline MorseClassification classify(const RankedPoset& p, const MateTable& table, Rank q) {
  MorseClassification c;
  c.q = q;
  for (auto i : p.slice(q)) {
    const auto j = table.mate(i);
    if (j == npos) c.crit.push_back(p.id(i));
    else if (p.rank(j) > q) c.up.push_back(p.id(i));
    else c.down.push_back(p.id(i));
  }
  return c;
}

inline MorseClassification classify(const RankedPoset& p, const Matching& m, Rank q) {
  return classify(p, bind_matching(p, m), q);
}

/// Step DAG of M-paths on one rank slice with a cached topological order.
/// Parities from a fixed source are computed by one pass over that order.
class PathParity {
 public:
  PathParity(const RankedPoset& p, const MateTable& table, Rank q) : poset_(&p), q_(q) {
    const auto slice = p.slice(q);
    const std::size_t n = slice.size();
    succ_.assign(n, {});
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      const auto y_prev = slice[a];
      for (auto x : p.down(y_prev)) {
        const auto y_next = table.mate(x);
        if (y_next == npos || p.rank(y_next) != q || y_next == y_prev) continue;
        const auto b = p.slice_position(y_next);
        succ_[a].push_back(b);
        ++indegree[b];
      }
      std::sort(succ_[a].begin(), succ_[a].end());
    }
    std::vector<std::size_t> ready;
    for (std::size_t a = n; a-- > 0;)
      if (indegree[a] == 0) ready.push_back(a);
    while (!ready.empty()) {
      const auto a = ready.back();
      ready.pop_back();
      order_.push_back(a);
      for (auto b : succ_[a])
        if (--indegree[b] == 0) ready.push_back(b);
    }
    if (order_.size() != n) {
      throw Error(ErrorKind::CyclicMatching, "closed M-path at rank " + std::to_string(q));
    }
  }

  Rank rank() const noexcept { return q_; }

  /// Parity of the number of M-paths from `source` to every rank-q element,
  /// indexed by slice position. The trivial path counts once.
  std::vector<std::uint8_t> from(std::size_t source) const {
    if (poset_->rank(source) != q_) {
      throw Error(ErrorKind::RankMismatch, "'" + poset_->id(source) + "' is not of rank " +
                                               std::to_string(q_));
    }
    std::vector<std::uint8_t> count(succ_.size(), 0);
    count[poset_->slice_position(source)] = 1;
    for (auto a : order_) {
      if (!count[a]) continue;
      for (auto b : succ_[a]) count[b] ^= 1;
    }
    return count;
  }

  const std::vector<std::vector<std::size_t>>& successors() const noexcept { return succ_; }

 private:
  const RankedPoset* poset_;
  Rank q_;
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<std::size_t> order_;
};

/// ℓ(x, y): parity of the number of M-paths from x to y.
inline int mpath_parity(const RankedPoset& p, const Matching& m, const ElementId& x,
                        const ElementId& y) {
  const auto table = bind_matching(p, m);
  const auto xi = p.index_of(x);
  const auto yi = p.index_of(y);
  if (p.rank(xi) != p.rank(yi)) {
    throw Error(ErrorKind::RankMismatch, "'" + x + "' and '" + y + "' differ in rank");
  }
  if (!is_acyclic(p, table)) throw Error(ErrorKind::CyclicMatching, "matching is not acyclic");
  PathParity dag(p, table, p.rank(xi));
  return dag.from(xi)[p.slice_position(yi)];
}

/// Pairs each edge of the tree F(T) with its endpoint farthest from `root`.
/// Throws UnknownRoot or NotATree.
inline Matching tree_matching(const RankedPoset& tree, const ElementId& root) {
  if (!tree.contains(root)) throw Error(ErrorKind::UnknownRoot, "'" + root + "'");
  const auto r = tree.index_of(root);
  if (tree.rank(r) != 0) throw Error(ErrorKind::UnknownRoot, "'" + root + "' is not a vertex");
  if (tree.rank_of_poset() > 1) throw Error(ErrorKind::NotATree, "poset has rank above 1");
  const auto vertices = tree.slice(0);
  const auto edges = tree.slice(1);
  for (auto e : edges) {
    if (tree.down(e).size() != 2) {
      throw Error(ErrorKind::NotATree, "'" + tree.id(e) + "' does not have two endpoints");
    }
  }
  if (edges.size() + 1 != vertices.size()) {
    throw Error(ErrorKind::NotATree, "edge count is not vertex count minus one");
  }

  MateTable table(tree.size());
  std::vector<bool> reached(tree.size(), false);
  std::deque<std::size_t> queue{r};
  reached[r] = true;
  std::size_t seen = 1;
  while (!queue.empty()) {
    const auto v = queue.front();
    queue.pop_front();
    for (auto e : tree.up(v)) {
      if (table.matched(e)) continue;
      const auto d = tree.down(e);
      const auto w = d[0] == v ? d[1] : d[0];
      if (reached[w]) throw Error(ErrorKind::NotATree, "cycle through '" + tree.id(e) + "'");
      reached[w] = true;
      ++seen;
      table.pair(w, e);
      queue.push_back(w);
    }
  }
  if (seen != vertices.size()) throw Error(ErrorKind::NotATree, "not connected");
  return to_matching(tree, table);
}

/// Coreduction. Repeatedly pair the first element (canonical order) whose
/// down-set has exactly one remaining element with that element; when no such
/// element exists, retire the first remaining element with an empty remaining
/// down-set as critical. Removal times strictly decrease along any M-path, so
/// the result is acyclic; this is re-checked before returning.
inline Matching greedy_morse_matching(const RankedPoset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> live_down(n);
  std::vector<bool> removed(n, false);
  std::set<std::size_t> one_free;   // live elements with exactly one live face
  std::set<std::size_t> no_free;    // live elements with no live face
  for (std::size_t i = 0; i < n; ++i) {
    live_down[i] = p.down(i).size();
    if (live_down[i] == 1) one_free.insert(i);
    if (live_down[i] == 0) no_free.insert(i);
  }
  auto remove = [&](std::size_t i) {
    removed[i] = true;
    one_free.erase(i);
    no_free.erase(i);
    for (auto y : p.up(i)) {
      if (removed[y]) continue;
      if (live_down[y] == 1) one_free.erase(y);
      --live_down[y];
      if (live_down[y] == 1) one_free.insert(y);
      if (live_down[y] == 0) no_free.insert(y);
    }
  };

  MateTable table(n);
  while (!one_free.empty() || !no_free.empty()) {
    if (!one_free.empty()) {
      const auto y = *one_free.begin();
      std::size_t x = npos;
      for (auto z : p.down(y))
        if (!removed[z]) x = z;
      table.pair(x, y);
      remove(y);
      remove(x);
    } else {
      remove(*no_free.begin());
    }
  }
  if (!is_acyclic(p, table)) throw Error(ErrorKind::Internal, "coreduction produced a cycle");
  return to_matching(p, table);
}

/// Backtracking search for an acyclic matching leaving no rank-(k-1)
/// element critical, k = rank_of_poset. Only pairs touching rank k-1 are
/// tried: dropping pairs from an acyclic matching keeps it acyclic.
inline std::optional<Matching> exhaustive_morse_matching(const RankedPoset& p,
                                                          std::size_t max_elements = 30) {
  if (p.size() > max_elements) {
    throw Error(ErrorKind::TooLarge, std::to_string(p.size()) + " elements exceeds the guard of " +
                                         std::to_string(max_elements));
  }
  const Rank k = p.rank_of_poset();
  if (k < 1) return Matching{};
  const auto targets = p.slice(k - 1);
  MateTable table(p.size());

  std::function<bool(std::size_t)> place = [&](std::size_t t) -> bool {
    if (t == targets.size()) return true;
    const auto x = targets[t];
    if (table.matched(x)) return place(t + 1);
    auto attempt = [&](std::size_t lo, std::size_t hi) {
      const auto other = lo == x ? hi : lo;
      if (table.matched(other)) return false;
      table.pair(lo, hi);
      if (is_acyclic(p, table) && place(t + 1)) return true;
      table.unpair(x);
      return false;
    };
    for (auto z : p.down(x))
      if (attempt(z, x)) return true;
    for (auto y : p.up(x))
      if (attempt(x, y)) return true;
    return false;
  };
  if (!place(0)) return std::nullopt;
  return to_matching(p, table);
}

}  // namespace spherecolor
