#ifndef LGIH_LINALG_HPP
#define LGIH_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

namespace lgih {

using Rational = mpq_class;

/// Renders an integer-valued rational as its integer, otherwise as "p/q".
std::string to_string(const Rational& q);

struct SparseEntry {
  std::size_t row;
  Rational value;
};

/// Sparse column with strictly increasing row indices and no zero entries.
using SparseColumn = std::vector<SparseEntry>;

/// Builds a SparseColumn from unsorted (row, value) pairs, summing duplicates
/// and dropping zeros.
SparseColumn make_column(std::vector<std::pair<std::size_t, Rational>> entries);

/*
 * Incremental exact column reduction over the rationals.
 *
 * Each added column is reduced against previously stored pivot columns, keyed
 * by their largest row index. A column that reduces to zero lies in the span of
 * the earlier ones. Boundary matrices of simplicial-type complexes keep fill-in
 * small under this ordering, the same observation behind standard persistence
 * reductions.
 */
class ColumnReducer {
 public:
  /// Returns true when `column` is independent of everything added so far.
  bool add(SparseColumn column);

  /// Reduces `column` without storing it; returns true if it becomes zero.
  bool in_span(SparseColumn column) const;

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  SparseColumn reduce(SparseColumn column) const;

  std::unordered_map<std::size_t, SparseColumn> pivots_;
};

std::size_t rank(std::span<const SparseColumn> columns);

/// Row-major dense rational matrix for the small systems (flag vectors, fits).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(std::span<const Rational> row);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// In-place reduced row echelon form; returns the pivot column of each
/// nonzero row, in order.
std::vector<std::size_t> rref(DenseMatrix& m);

std::size_t rank(DenseMatrix m);

/// One solution of A x = b (free variables set to zero), or nullopt when the
/// system is inconsistent.
std::optional<std::vector<Rational>> solve(const DenseMatrix& a, std::span<const Rational> b);

}  // namespace lgih

#endif  // LGIH_LINALG_HPP
