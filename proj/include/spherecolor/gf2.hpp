#pragma once

// Dense linear algebra over GF(2) on machine-word bitsets, and the boundary
// maps of a ranked poset.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spherecolor/poset.hpp"

namespace spherecolor {

namespace detail {
inline constexpr std::size_t kWordBits = 64;
inline std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }
}  // namespace detail

class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t size) : size_(size), words_(detail::word_count(size), 0) {}

  static Gf2Vector ones(std::size_t size) {
    Gf2Vector v(size);
    for (std::size_t i = 0; i < size; ++i) v.set(i, true);
    return v;
  }

  static Gf2Vector from_bits(const std::vector<int>& bits) {
    Gf2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] & 1);
    return v;
  }

  std::size_t size() const noexcept { return size_; }

  bool get(std::size_t i) const { return (words_[i / detail::kWordBits] >> (i % detail::kWordBits)) & 1U; }
  void set(std::size_t i, bool value) {
    const auto mask = std::uint64_t{1} << (i % detail::kWordBits);
    auto& w = words_[i / detail::kWordBits];
    w = value ? (w | mask) : (w & ~mask);
  }
  void flip(std::size_t i) { words_[i / detail::kWordBits] ^= std::uint64_t{1} << (i % detail::kWordBits); }

  bool is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  std::size_t popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  Gf2Vector& operator^=(const Gf2Vector& other) {
    if (other.size_ != size_) throw Error(ErrorKind::DimensionMismatch, "vector xor");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }
  friend Gf2Vector operator^(Gf2Vector a, const Gf2Vector& b) { return a ^= b; }

  /// Parity of the bitwise AND.
  bool dot(const Gf2Vector& other) const {
    if (other.size_ != size_) throw Error(ErrorKind::DimensionMismatch, "vector dot");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
  }

  std::vector<int> to_bits() const {
    std::vector<int> out(size_);
    for (std::size_t i = 0; i < size_; ++i) out[i] = get(i);
    return out;
  }

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Gf2Vector(cols)) {}

  static Gf2Matrix identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_.at(r).get(c); }
  void set(std::size_t r, std::size_t c, bool value) { rows_.at(r).set(c, value); }

  const Gf2Vector& row(std::size_t r) const { return rows_.at(r); }

  Gf2Vector column(std::size_t c) const {
    Gf2Vector v(rows());
    for (std::size_t r = 0; r < rows(); ++r) v.set(r, get(r, c));
    return v;
  }

  Gf2Matrix select_columns(const std::vector<std::size_t>& cols) const {
    Gf2Matrix m(rows(), cols.size());
    for (std::size_t r = 0; r < rows(); ++r)
      for (std::size_t j = 0; j < cols.size(); ++j) m.set(r, j, get(r, cols[j]));
    return m;
  }

  bool is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.is_zero(); });
  }

  /// Rows of '0'/'1' characters separated by newlines.
  std::string to_grid() const {
    std::string out;
    for (std::size_t r = 0; r < rows(); ++r) {
      for (std::size_t c = 0; c < cols(); ++c) out += get(r, c) ? '1' : '0';
      out += '\n';
    }
    return out;
  }

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<Gf2Vector> rows_;
};

inline Gf2Vector apply(const Gf2Matrix& a, const Gf2Vector& v) {
  if (v.size() != a.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix has " + std::to_string(a.cols()) +
                                                  " columns, vector has " + std::to_string(v.size()));
  }
  Gf2Vector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) out.set(r, a.row(r).dot(v));
  return out;
}

inline Gf2Matrix multiply(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  Gf2Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Gf2Vector acc(b.cols());
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a.get(r, k)) acc ^= b.row(k);
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, c, acc.get(c));
  }
  return out;
}

/// Matrix of d_q : C_q -> C_{q-1}. Rows follow slice q-1, columns slice q,
/// both in canonical id order.
inline Gf2Matrix boundary_matrix(const RankedPoset& p, Rank q) {
  if (q < 1 || q > p.rank_of_poset()) {
    throw Error(ErrorKind::RankOutOfRange, "boundary at rank " + std::to_string(q) +
                                               " of a rank-" + std::to_string(p.rank_of_poset()) +
                                               " poset");
  }
  const auto rows = p.slice(q - 1);
  const auto cols = p.slice(q);
  Gf2Matrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (auto z : p.down(cols[c])) m.set(p.slice_position(z), c, true);
  return m;
}

/// True iff d_{k-1} d_k vanishes.
inline bool dd_zero_check(const RankedPoset& p, Rank k) {
  if (k < 2 || k > p.rank_of_poset()) {
    throw Error(ErrorKind::RankOutOfRange, "composition at rank " + std::to_string(k));
  }
  return multiply(boundary_matrix(p, k - 1), boundary_matrix(p, k)).is_zero();
}

namespace detail {

struct Echelon {
  std::vector<Gf2Vector> rows;
  std::vector<std::uint8_t> rhs;
  std::vector<std::size_t> pivot_cols;  // pivot column of rows[0..rank)
  bool consistent = true;
};

// Reduced row echelon form. Columns are scanned left to right; the pivot for
// a column is the lowest-indexed remaining row carrying a one there.
inline Echelon eliminate(const Gf2Matrix& a, const Gf2Vector* b) {
  Echelon e;
  e.rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    e.rows.push_back(a.row(r));
    e.rhs.push_back(b ? b->get(r) : 0);
  }
  std::size_t next = 0;
  for (std::size_t c = 0; c < a.cols() && next < a.rows(); ++c) {
    std::size_t pivot = npos;
    for (std::size_t r = next; r < a.rows(); ++r)
      if (e.rows[r].get(c)) {
        pivot = r;
        break;
      }
    if (pivot == npos) continue;
    std::swap(e.rows[pivot], e.rows[next]);
    std::swap(e.rhs[pivot], e.rhs[next]);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r != next && e.rows[r].get(c)) {
        e.rows[r] ^= e.rows[next];
        e.rhs[r] ^= e.rhs[next];
      }
    }
    e.pivot_cols.push_back(c);
    ++next;
  }
  for (std::size_t r = next; r < a.rows(); ++r)
    if (e.rhs[r]) e.consistent = false;
  return e;
}

}  // namespace detail

inline std::size_t gf2_rank(const Gf2Matrix& a) { return detail::eliminate(a, nullptr).pivot_cols.size(); }

/// One solution of A x = b with free variables set to zero, or nullopt when
/// the system is inconsistent.
inline std::optional<Gf2Vector> solve_gf2(const Gf2Matrix& a, const Gf2Vector& b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix has " + std::to_string(a.rows()) +
                                                  " rows, right-hand side has " +
                                                  std::to_string(b.size()));
  }
  const auto e = detail::eliminate(a, &b);
  if (!e.consistent) return std::nullopt;
  Gf2Vector x(a.cols());
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x.set(e.pivot_cols[r], e.rhs[r]);
  return x;
}

}  // namespace spherecolor
