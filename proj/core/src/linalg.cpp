#include "lgih/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgih {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

SparseColumn make_column(std::vector<std::pair<std::size_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseColumn out;
  out.reserve(entries.size());
  for (auto& [row, value] : entries) {
    if (!out.empty() && out.back().row == row) {
      out.back().value += value;
      if (out.back().value == 0) out.pop_back();
    } else if (value != 0) {
      out.push_back({row, std::move(value)});
    }
  }
  return out;
}

namespace {

// a - factor * b, both sorted by row.
SparseColumn axpy(const SparseColumn& a, const Rational& factor, const SparseColumn& b) {
  SparseColumn out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->row < ib->row)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->row < ia->row) {
      out.push_back({ib->row, -factor * ib->value});
      ++ib;
    } else {
      Rational v = ia->value - factor * ib->value;
      if (v != 0) out.push_back({ia->row, std::move(v)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

SparseColumn ColumnReducer::reduce(SparseColumn column) const {
  while (!column.empty()) {
    auto it = pivots_.find(column.back().row);
    if (it == pivots_.end()) break;
    // stored pivots are normalised so their last entry is 1
    Rational factor = column.back().value;
    column = axpy(column, factor, it->second);
  }
  return column;
}

bool ColumnReducer::add(SparseColumn column) {
  column = reduce(std::move(column));
  if (column.empty()) return false;
  Rational lead = column.back().value;
  for (auto& e : column) e.value /= lead;
  std::size_t key = column.back().row;
  pivots_.emplace(key, std::move(column));
  return true;
}

bool ColumnReducer::in_span(SparseColumn column) const {
  return reduce(std::move(column)).empty();
}

std::size_t rank(std::span<const SparseColumn> columns) {
  ColumnReducer reducer;
  for (const auto& c : columns) reducer.add(c);
  return reducer.rank();
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

void DenseMatrix::append_row(std::span<const Rational> row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("DenseMatrix::append_row: width mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<std::size_t> rref(DenseMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    Rational lead = m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) /= lead;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(DenseMatrix m) { return rref(m).size(); }

std::optional<std::vector<Rational>> solve(const DenseMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: right-hand side size mismatch");
  DenseMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

}  // namespace lgih
