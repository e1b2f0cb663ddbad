#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "mincode/bitvector.hpp"
#include "mincode/errors.hpp"

namespace mincode {

/// Dense matrix over F_2 stored as a list of row vectors.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  explicit GF2Matrix(std::size_t ncols) : ncols_(ncols) {}

  GF2Matrix(std::vector<BitVector> rows, std::size_t ncols) : ncols_(ncols), rows_(std::move(rows)) {
    for (const auto& r : rows_) check_width(r);
  }

  static GF2Matrix identity(std::size_t k) {
    GF2Matrix m(k);
    for (std::size_t i = 0; i < k; ++i) {
      BitVector r(k);
      r.set(i);
      m.append(std::move(r));
    }
    return m;
  }

  static GF2Matrix from_points(const std::vector<Point>& points, int n) {
    GF2Matrix m(static_cast<std::size_t>(n));
    for (Point p : points) m.append(BitVector::from_point(p, n));
    return m;
  }

  void append(BitVector row) {
    check_width(row);
    rows_.push_back(std::move(row));
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return ncols_; }
  const BitVector& row(std::size_t i) const { return rows_.at(i); }
  const std::vector<BitVector>& row_list() const noexcept { return rows_; }

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  void check_width(const BitVector& r) const {
    if (r.size() != ncols_) throw PreconditionError("GF2Matrix: row width differs from ncols");
  }

  std::size_t ncols_ = 0;
  std::vector<BitVector> rows_;
};

namespace detail {

/// Incrementally maintained reduced row echelon basis.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ncols) : ncols_(ncols) {}

  /// Reduces v against the basis; returns true (and absorbs v) when it was independent.
  bool insert(BitVector v) {
    reduce(v);
    const std::size_t pivot = v.find_first();
    if (pivot == v.size()) return false;
    for (auto& [p, row] : rows_) {
      if (row.test(pivot)) row ^= v;
    }
    rows_.emplace_back(pivot, std::move(v));
    return true;
  }

  void reduce(BitVector& v) const {
    for (const auto& [p, row] : rows_) {
      if (v.test(p)) v ^= row;
    }
  }

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return ncols_; }
  const std::vector<std::pair<std::size_t, BitVector>>& pivots() const noexcept { return rows_; }

 private:
  std::size_t ncols_;
  std::vector<std::pair<std::size_t, BitVector>> rows_;
};

}  // namespace detail

inline std::size_t rank(const GF2Matrix& m) {
  detail::EchelonBasis basis(m.cols());
  for (const auto& r : m.row_list()) basis.insert(r);
  return basis.rank();
}

/// Indices of a maximal independent subset of rows, chosen greedily in row order.
inline std::vector<std::size_t> independent_rows(const GF2Matrix& m) {
  detail::EchelonBasis basis(m.cols());
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (basis.insert(m.row(i))) kept.push_back(i);
  }
  return kept;
}

inline bool in_span(const GF2Matrix& m, const BitVector& v) {
  if (v.size() != m.cols()) throw PreconditionError("in_span: width mismatch");
  detail::EchelonBasis basis(m.cols());
  for (const auto& r : m.row_list()) basis.insert(r);
  BitVector w = v;
  basis.reduce(w);
  return w.none();
}

/// Basis of the orthogonal complement {w : dot(w, b) = 0 for every row b}.
inline GF2Matrix dual_basis(const GF2Matrix& basis_rows) {
  const std::size_t n = basis_rows.cols();
  detail::EchelonBasis basis(n);
  for (const auto& r : basis_rows.row_list()) {
    if (!basis.insert(r)) throw PreconditionError("dual_basis: input rows are linearly dependent");
  }
  std::vector<bool> is_pivot(n, false);
  for (const auto& [p, row] : basis.pivots()) is_pivot[p] = true;

  // Each free column j gives the solution x_j = 1, x_p = row_p[j] for every pivot p.
  GF2Matrix dual(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    BitVector v(n);
    v.set(j);
    for (const auto& [p, row] : basis.pivots()) {
      if (row.test(j)) v.set(p);
    }
    dual.append(std::move(v));
  }
  return dual;
}

}  // namespace mincode
