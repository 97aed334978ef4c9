#pragma once

// Ranked posets given by their cover relation.
//
// Elements are stored in canonical order: by rank, then by id. Every rank
// slice is therefore a contiguous index range, and matrix rows/columns built
// over a slice follow id order.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spherecolor/error.hpp"

namespace spherecolor {

using ElementId = std::string;
using Rank = int;

inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

struct ElementSpec {
  ElementId id;
  Rank rank = 0;
};

/// (lower, upper): `upper` covers `lower`.
using CoverPair = std::pair<ElementId, ElementId>;

class RankedPoset;

RankedPoset build_poset(std::vector<ElementSpec> elements, std::vector<CoverPair> covers);

class RankedPoset {
 public:
  RankedPoset() = default;

  std::size_t size() const noexcept { return ids_.size(); }
  Rank rank_of_poset() const noexcept { return max_rank_; }

  const ElementId& id(std::size_t i) const { return ids_.at(i); }
  Rank rank(std::size_t i) const { return ranks_.at(i); }

  bool contains(const ElementId& id) const { return index_.count(id) != 0; }

  std::size_t index_of(const ElementId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw Error(ErrorKind::UnknownElement, "'" + id + "'");
    return it->second;
  }

  /// Indices covered by i (the down-set Δ), ascending.
  std::span<const std::size_t> down(std::size_t i) const { return down_.at(i); }
  /// Indices covering i (the up-set ∇), ascending.
  std::span<const std::size_t> up(std::size_t i) const { return up_.at(i); }

  bool covers(std::size_t lower, std::size_t upper) const {
    const auto& d = down_.at(upper);
    return std::binary_search(d.begin(), d.end(), lower);
  }

  /// Canonical index range of rank q; empty outside [0, rank_of_poset].
  std::span<const std::size_t> slice(Rank q) const {
    if (q < 0 || static_cast<std::size_t>(q) >= slices_.size()) return {};
    return slices_[static_cast<std::size_t>(q)];
  }

  /// Position of element i inside its own rank slice.
  std::size_t slice_position(std::size_t i) const { return i - slice(ranks_.at(i)).front(); }

  std::vector<ElementId> slice_ids(Rank q) const {
    std::vector<ElementId> out;
    for (auto i : slice(q)) out.push_back(ids_[i]);
    return out;
  }

  std::size_t cover_count() const {
    std::size_t n = 0;
    for (const auto& d : down_) n += d.size();
    return n;
  }

  /// Element counts per rank, rank 0 first.
  std::vector<std::size_t> rank_counts() const {
    std::vector<std::size_t> out;
    for (const auto& s : slices_) out.push_back(s.size());
    return out;
  }

 private:
  friend RankedPoset build_poset(std::vector<ElementSpec>, std::vector<CoverPair>);

  std::vector<ElementId> ids_;
  std::vector<Rank> ranks_;
  std::unordered_map<ElementId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> down_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> slices_;
  Rank max_rank_ = 0;
};

/// Validates the rank axioms and builds the poset. Throws Error with
/// UnknownElement, DuplicateElement, RankSkip, MinimalRankNonzero,
/// DuplicateCover or SelfCover.
inline RankedPoset build_poset(std::vector<ElementSpec> elements, std::vector<CoverPair> covers) {
  RankedPoset p;
  {
    std::set<ElementId> seen;
    for (const auto& e : elements) {
      if (e.rank < 0) throw Error(ErrorKind::InvalidInput, "negative rank for '" + e.id + "'");
      if (!seen.insert(e.id).second) throw Error(ErrorKind::DuplicateElement, "'" + e.id + "'");
    }
  }
  std::sort(elements.begin(), elements.end(), [](const ElementSpec& a, const ElementSpec& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.id < b.id;
  });

  const std::size_t n = elements.size();
  p.ids_.reserve(n);
  p.ranks_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.ids_.push_back(elements[i].id);
    p.ranks_.push_back(elements[i].rank);
    p.index_.emplace(elements[i].id, i);
    p.max_rank_ = std::max(p.max_rank_, elements[i].rank);
  }
  p.down_.assign(n, {});
  p.up_.assign(n, {});

  std::set<std::pair<std::size_t, std::size_t>> seen_covers;
  for (const auto& [lo_id, hi_id] : covers) {
    const auto lo = p.index_of(lo_id);
    const auto hi = p.index_of(hi_id);
    if (lo == hi) throw Error(ErrorKind::SelfCover, "'" + lo_id + "'");
    if (p.ranks_[hi] != p.ranks_[lo] + 1) {
      throw Error(ErrorKind::RankSkip, "cover ('" + lo_id + "', '" + hi_id + "') has ranks " +
                                           std::to_string(p.ranks_[lo]) + " -> " +
                                           std::to_string(p.ranks_[hi]));
    }
    if (!seen_covers.emplace(lo, hi).second) {
      throw Error(ErrorKind::DuplicateCover, "('" + lo_id + "', '" + hi_id + "')");
    }
    p.down_[hi].push_back(lo);
    p.up_[lo].push_back(hi);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(p.down_[i].begin(), p.down_[i].end());
    std::sort(p.up_[i].begin(), p.up_[i].end());
    if (p.ranks_[i] > 0 && p.down_[i].empty()) {
      throw Error(ErrorKind::MinimalRankNonzero,
                  "'" + p.ids_[i] + "' covers nothing but has rank " + std::to_string(p.ranks_[i]));
    }
  }

  p.slices_.assign(n == 0 ? 0 : static_cast<std::size_t>(p.max_rank_) + 1, {});
  for (std::size_t i = 0; i < n; ++i) p.slices_[static_cast<std::size_t>(p.ranks_[i])].push_back(i);
  return p;
}

inline std::vector<ElementId> delta(const RankedPoset& p, const ElementId& x) {
  std::vector<ElementId> out;
  for (auto i : p.down(p.index_of(x))) out.push_back(p.id(i));
  return out;
}

inline std::vector<ElementId> nabla(const RankedPoset& p, const ElementId& x) {
  std::vector<ElementId> out;
  for (auto i : p.up(p.index_of(x))) out.push_back(p.id(i));
  return out;
}

/// Unordered pairs {a, b} (a < b by index) of distinct rank-q elements whose
/// down-sets intersect.
inline std::vector<std::pair<std::size_t, std::size_t>> adjacent_index_pairs(const RankedPoset& p,
                                                                              Rank q) {
  if (q < 0 || q > p.rank_of_poset()) {
    throw Error(ErrorKind::RankOutOfRange, "rank " + std::to_string(q));
  }
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (auto z : p.slice(q - 1)) {
    const auto ups = p.up(z);
    for (std::size_t a = 0; a < ups.size(); ++a)
      for (std::size_t b = a + 1; b < ups.size(); ++b) pairs.emplace(ups[a], ups[b]);
  }
  return {pairs.begin(), pairs.end()};
}

inline std::vector<std::pair<ElementId, ElementId>> adjacent_pairs(const RankedPoset& p, Rank q) {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (auto [a, b] : adjacent_index_pairs(p, q)) out.emplace_back(p.id(a), p.id(b));
  return out;
}

}  // namespace spherecolor
