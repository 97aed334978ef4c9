#pragma once

// Sphere-likeness checks and proper 2-colourings of the top-rank elements.
//
// Two constructive routes:
//   color_by_solve  solves d_k X = (1, ..., 1) over GF(2);
//   color_by_morse  builds the chain sum_j ->y_j under M_j = M \ {(x_j, y_j)}
//                   from M-path parities, which d_k maps onto the all-ones
//                   chain of rank k-1.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spherecolor/bipartite.hpp"
#include "spherecolor/gf2.hpp"
#include "spherecolor/matching.hpp"
#include "spherecolor/poset.hpp"

namespace spherecolor {

enum class Verdict { Pass, Fail, Unknown };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

struct CoverCountCheck {
  Verdict verdict = Verdict::Pass;
  std::optional<ElementId> counterexample;
  std::size_t observed = 0;  // |∇| of the counterexample
};

struct DiamondCheck {
  Verdict verdict = Verdict::Pass;
  std::optional<std::pair<ElementId, ElementId>> counterexample;  // (y, z)
  std::size_t observed = 0;
};

struct MatchingCheck {
  Verdict verdict = Verdict::Unknown;
  std::string source;  // "supplied", "greedy" or "exhaustive"
  std::optional<Matching> witness;
  std::vector<ElementId> criticals;    // rank-(k-1) criticals of the tried matching
  std::vector<ElementId> closed_path;  // set when a supplied matching is cyclic
  std::string reason;
};

struct SphereLikeReport {
  Rank k = 0;
  CoverCountCheck cond_i;
  DiamondCheck cond_ii;
  MatchingCheck cond_iii;
  CoverCountCheck hypothesis_even;

  bool sphere_like() const {
    return cond_i.verdict == Verdict::Pass && cond_ii.verdict == Verdict::Pass &&
           cond_iii.verdict == Verdict::Pass;
  }
  bool all_pass() const { return sphere_like() && hypothesis_even.verdict == Verdict::Pass; }
};

struct CheckOptions {
  /// Fall back to exhaustive search when coreduction leaves rank-(k-1)
  /// criticals and the poset has at most this many elements. 0 disables.
  std::size_t exhaustive_limit = 30;
};

namespace detail {

inline CoverCountCheck check_cover_counts(const RankedPoset& p, Rank q, auto&& ok) {
  CoverCountCheck c;
  for (auto x : p.slice(q)) {
    const auto n = p.up(x).size();
    if (!ok(n)) {
      c.verdict = Verdict::Fail;
      c.counterexample = p.id(x);
      c.observed = n;
      return c;
    }
  }
  return c;
}

inline MatchingCheck judge_matching(const RankedPoset& p, const MateTable& table, Rank k) {
  MatchingCheck c;
  c.criticals = classify(p, table, k - 1).crit;
  c.verdict = c.criticals.empty() ? Verdict::Pass : Verdict::Fail;
  if (!c.criticals.empty()) c.reason = "rank-" + std::to_string(k - 1) + " elements left critical";
  return c;
}

}  // namespace detail

/// Conditions (i)-(iii) of sphere-likeness plus the even-covering hypothesis
/// at rank k-2. Throws RankTooSmall when rank_of_poset < 2.
inline SphereLikeReport check_sphere_like(const RankedPoset& p,
                                          const std::optional<Matching>& supplied = std::nullopt,
                                          const CheckOptions& options = {}) {
  const Rank k = p.rank_of_poset();
  if (k < 2) throw Error(ErrorKind::RankTooSmall, "rank " + std::to_string(k) + " < 2");
  SphereLikeReport r;
  r.k = k;

  r.cond_i = detail::check_cover_counts(p, k - 1, [](std::size_t n) { return n == 2; });
  r.hypothesis_even = detail::check_cover_counts(p, k - 2, [](std::size_t n) { return n % 2 == 0; });

  for (auto y : p.slice(k)) {
    std::map<std::size_t, std::size_t> through;
    for (auto x : p.down(y))
      for (auto z : p.down(x)) ++through[z];
    for (auto [z, count] : through) {
      if (count % 2 != 0) {
        r.cond_ii.verdict = Verdict::Fail;
        r.cond_ii.counterexample.emplace(p.id(y), p.id(z));
        r.cond_ii.observed = count;
        break;
      }
    }
    if (r.cond_ii.verdict == Verdict::Fail) break;
  }

  if (supplied) {
    MatchingCheck c;
    c.source = "supplied";
    try {
      const auto table = bind_matching(p, *supplied);
      c.closed_path = find_closed_mpath(p, table);
      if (!c.closed_path.empty()) {
        c.verdict = Verdict::Fail;
        c.reason = "matching has a closed M-path";
      } else {
        auto judged = detail::judge_matching(p, table, k);
        c.verdict = judged.verdict;
        c.criticals = std::move(judged.criticals);
        c.reason = std::move(judged.reason);
        if (c.verdict == Verdict::Pass) c.witness = supplied->normalized();
      }
    } catch (const Error& e) {
      c.verdict = Verdict::Fail;
      c.reason = e.what();
    }
    r.cond_iii = std::move(c);
    return r;
  }

  const auto greedy = greedy_morse_matching(p);
  auto judged = detail::judge_matching(p, bind_matching(p, greedy), k);
  judged.source = "greedy";
  if (judged.verdict == Verdict::Pass) {
    judged.witness = greedy;
    r.cond_iii = std::move(judged);
    return r;
  }
  if (p.size() <= options.exhaustive_limit) {
    MatchingCheck c;
    c.source = "exhaustive";
    if (auto found = exhaustive_morse_matching(p, options.exhaustive_limit)) {
      c.verdict = Verdict::Pass;
      c.witness = std::move(found);
    } else {
      c.verdict = Verdict::Fail;
      c.criticals = std::move(judged.criticals);
      c.reason = "no acyclic matching leaves rank " + std::to_string(k - 1) + " fully matched";
    }
    r.cond_iii = std::move(c);
    return r;
  }
  judged.verdict = Verdict::Unknown;
  judged.reason = "coreduction left rank-" + std::to_string(k - 1) + " criticals";
  r.cond_iii = std::move(judged);
  return r;
}

/// ψ: top-rank element id -> colour in {0, 1}.
struct Coloring {
  std::map<ElementId, int> psi;

  static Coloring from_vector(const RankedPoset& p, Rank k, const Gf2Vector& v) {
    Coloring c;
    const auto slice = p.slice(k);
    for (std::size_t j = 0; j < slice.size(); ++j) c.psi.emplace(p.id(slice[j]), v.get(j));
    return c;
  }

  Gf2Vector to_vector(const RankedPoset& p, Rank k) const {
    const auto slice = p.slice(k);
    Gf2Vector v(slice.size());
    for (std::size_t j = 0; j < slice.size(); ++j) {
      auto it = psi.find(p.id(slice[j]));
      if (it == psi.end()) throw Error(ErrorKind::IncompleteColoring, "'" + p.id(slice[j]) + "'");
      v.set(j, it->second & 1);
    }
    return v;
  }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// First adjacent top-rank pair sharing a colour, or nullopt when ψ is proper.
/// Throws IncompleteColoring when ψ misses a top-rank element and
/// InvalidInput when it names anything else or uses a colour outside {0, 1}.
inline std::optional<std::pair<ElementId, ElementId>> verify_coloring(const RankedPoset& p,
                                                                      const Coloring& c) {
  const Rank k = p.rank_of_poset();
  for (const auto& [id, colour] : c.psi) {
    if (!p.contains(id) || p.rank(p.index_of(id)) != k) {
      throw Error(ErrorKind::InvalidInput, "'" + id + "' is not a top-rank element");
    }
    if (colour != 0 && colour != 1) throw Error(ErrorKind::InvalidInput, "colour of '" + id + "'");
  }
  const auto v = c.to_vector(p, k);
  for (auto [a, b] : adjacent_index_pairs(p, k)) {
    if (v.get(p.slice_position(a)) == v.get(p.slice_position(b))) return std::make_pair(p.id(a), p.id(b));
  }
  return std::nullopt;
}

/// Solves d_k X = (1, ..., 1). Requires every rank-(k-1) element to be covered
/// by exactly two elements; returns nullopt when the system is inconsistent.
inline std::optional<Coloring> color_by_solve(const RankedPoset& p) {
  const Rank k = p.rank_of_poset();
  if (k < 1) throw Error(ErrorKind::RankTooSmall, "rank 0 poset has no boundary");
  const auto cond = detail::check_cover_counts(p, k - 1, [](std::size_t n) { return n == 2; });
  if (cond.verdict != Verdict::Pass) {
    throw Error(ErrorKind::PreconditionFailed,
                "cond_i: '" + *cond.counterexample + "' is covered by " +
                    std::to_string(cond.observed) + " elements");
  }
  const auto d = boundary_matrix(p, k);
  const auto x = solve_gf2(d, Gf2Vector::ones(d.rows()));
  if (!x) return std::nullopt;
  return Coloring::from_vector(p, k, *x);
}

/// ξ = Σ_j ->y_j^{(M_j)}: for every up-matched (x_j, y_j) at rank k-1, the
/// parities of M_j-paths from y_j to each top-rank element, summed.
/// No preconditions are checked here.
inline Gf2Vector morse_chain(const RankedPoset& p, const MateTable& table) {
  const Rank k = p.rank_of_poset();
  Gf2Vector xi(p.slice(k).size());
  MateTable reduced = table;
  for (auto x : p.slice(k - 1)) {
    const auto y = table.mate(x);
    if (y == npos || p.rank(y) != k) continue;
    reduced.unpair(x);
    const auto parity = PathParity(p, reduced, k).from(y);
    for (std::size_t j = 0; j < parity.size(); ++j)
      if (parity[j]) xi.flip(j);
    reduced.pair(x, y);
  }
  return xi;
}

inline Gf2Vector morse_chain(const RankedPoset& p, const Matching& m) {
  return morse_chain(p, bind_matching(p, m));
}

/// Colouring read off the Morse chain. Requires the full sphere-like report
/// to pass with M as witness, including the even-covering hypothesis.
inline Coloring color_by_morse(const RankedPoset& p, const Matching& m) {
  const auto report = check_sphere_like(p, m);
  auto fail = [](const std::string& what) { throw Error(ErrorKind::PreconditionFailed, what); };
  if (report.cond_i.verdict != Verdict::Pass) fail("cond_i: '" + *report.cond_i.counterexample + "'");
  if (report.cond_ii.verdict != Verdict::Pass) {
    fail("cond_ii: ('" + report.cond_ii.counterexample->first + "', '" +
         report.cond_ii.counterexample->second + "')");
  }
  if (report.cond_iii.verdict != Verdict::Pass) fail("cond_iii: " + report.cond_iii.reason);
  if (report.hypothesis_even.verdict != Verdict::Pass) {
    fail("hypothesis_even: '" + *report.hypothesis_even.counterexample + "'");
  }
  const Rank k = p.rank_of_poset();
  auto c = Coloring::from_vector(p, k, morse_chain(p, m));
  if (auto bad = verify_coloring(p, c)) {
    throw Error(ErrorKind::Internal, "Morse colouring not proper at ('" + bad->first + "', '" +
                                         bad->second + "')");
  }
  return c;
}

struct BruteForceResult {
  std::optional<Coloring> coloring;
  std::vector<ElementId> odd_cycle;  // in the top-rank adjacency graph
};

/// Independent oracle: exhaustive search over all 2-colourings of S_k (first
/// colour pinned to 0), cross-checked against BFS bipartiteness of the
/// adjacency graph. Throws TooLarge above `max_top` top-rank elements.
inline BruteForceResult brute_force_color(const RankedPoset& p, std::size_t max_top = 24) {
  const Rank k = p.rank_of_poset();
  const auto slice = p.slice(k);
  const std::size_t n = slice.size();
  if (n > max_top) {
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " top-rank elements exceeds " +
                                         std::to_string(max_top));
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::uint32_t> neighbours(n, 0);
  for (auto [a, b] : adjacent_index_pairs(p, k)) {
    const auto i = p.slice_position(a), j = p.slice_position(b);
    edges.emplace_back(i, j);
    neighbours[i] |= std::uint32_t{1} << j;
    neighbours[j] |= std::uint32_t{1} << i;
  }

  std::optional<std::uint32_t> found;
  const std::uint64_t total = n == 0 ? 1 : std::uint64_t{1} << (n - 1);
  for (std::uint64_t half = 0; half < total && !found; ++half) {
    const auto mask = static_cast<std::uint32_t>(half << 1);
    bool proper = true;
    for (std::size_t i = 0; i < n && proper; ++i) {
      const std::uint32_t same = ((mask >> i) & 1U) ? mask : ~mask;
      proper = (neighbours[i] & same) == 0;
    }
    if (proper) found = mask;
  }

  const auto bfs = bfs_bipartition(n, edges);
  if (bfs.ok() != found.has_value()) {
    throw Error(ErrorKind::Internal, "exhaustive search and BFS bipartiteness disagree");
  }
  BruteForceResult out;
  if (found) {
    Gf2Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, (*found >> i) & 1U);
    out.coloring = Coloring::from_vector(p, k, v);
  } else {
    for (auto i : bfs.odd_cycle) out.odd_cycle.push_back(p.id(slice[i]));
  }
  return out;
}

}  // namespace spherecolor
