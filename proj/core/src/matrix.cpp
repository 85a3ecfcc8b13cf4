#include "nilhodge/matrix.hpp"

#include <algorithm>

#include "nilhodge/error.hpp"

namespace nilhodge {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw InvalidInput("matrix needs " + std::to_string(rows * cols) + " entries, got " +
                       std::to_string(entries_.size()));
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw InvalidInput("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vector> rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + r * cols);
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x.is_zero(); });
}

Vector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw InvalidInput("vector length does not match matrix columns");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvalidInput("matrix product shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.entries_) x *= s;
  return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), columns_(cols) {}

void SparseMatrix::set_column(std::size_t c, SparseVector entries) {
  for (const auto& e : entries) {
    if (e.index >= rows_) throw InvalidInput("sparse entry out of range");
  }
  columns_.at(c) = std::move(entries);
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    for (const auto& e : columns_[c]) t.columns_[e.index].push_back({c, e.value});
  }
  return t;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows_, cols_);
  for (std::size_t c = 0; c < cols_; ++c)
    for (const auto& e : columns_[c]) m(e.index, c) = e.value;
  return m;
}

Vector SparseMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw InvalidInput("vector length does not match matrix columns");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (const auto& e : columns_[c]) out[e.index] += v[c] * e.value;
  }
  return out;
}

SparseVector compress(std::vector<SparseEntry> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  SparseVector out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().index == t.index) {
      out.back().value += t.value;
    } else {
      if (!out.empty() && out.back().value.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().value.is_zero()) out.pop_back();
  return out;
}

EchelonBuilder::EchelonBuilder(std::size_t cols) : cols_(cols), row_of_pivot_(cols, -1) {}

bool EchelonBuilder::add(Vector row) {
  if (row.size() != cols_) throw InvalidInput("row length does not match echelon width");
  std::size_t lead = cols_;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (row[c].is_zero()) continue;
    const std::ptrdiff_t p = row_of_pivot_[c];
    if (p < 0) {
      lead = c;
      break;
    }
    const PivotRow& pivot = rows_[static_cast<std::size_t>(p)];
    const Rational factor = row[c];
    for (std::size_t s : pivot.support) row[s].subtract_product(factor, pivot.values[s]);
  }
  if (lead == cols_) return false;

  const Rational inv = Rational(1) / row[lead];
  PivotRow kept{lead, std::move(row), {}};
  for (std::size_t c = lead; c < cols_; ++c) {
    if (kept.values[c].is_zero()) continue;
    kept.values[c] *= inv;
    kept.support.push_back(c);
  }
  row_of_pivot_[lead] = static_cast<std::ptrdiff_t>(rows_.size());
  rows_.push_back(std::move(kept));
  return true;
}

bool EchelonBuilder::add_sparse(const SparseVector& row) {
  if (row.empty()) return false;
  Vector dense(cols_);
  for (const auto& e : row) dense.at(e.index) = e.value;
  return add(std::move(dense));
}

RowEchelon EchelonBuilder::reduced() const {
  std::vector<const PivotRow*> order;
  order.reserve(rows_.size());
  for (const auto& r : rows_) order.push_back(&r);
  std::sort(order.begin(), order.end(),
            [](const PivotRow* a, const PivotRow* b) { return a->pivot < b->pivot; });

  std::vector<Vector> rows;
  rows.reserve(order.size());
  std::vector<std::size_t> pivots;
  for (const PivotRow* r : order) {
    rows.push_back(r->values);
    pivots.push_back(r->pivot);
  }
  // Back substitution: clear each pivot column above its pivot.
  for (std::size_t i = rows.size(); i-- > 0;) {
    std::vector<std::size_t> support;
    for (std::size_t c = pivots[i]; c < cols_; ++c)
      if (!rows[i][c].is_zero()) support.push_back(c);
    for (std::size_t j = 0; j < i; ++j) {
      if (rows[j][pivots[i]].is_zero()) continue;
      const Rational factor = rows[j][pivots[i]];
      for (std::size_t s : support) rows[j][s].subtract_product(factor, rows[i][s]);
    }
  }
  return {Matrix::from_rows(cols_, rows), std::move(pivots)};
}

RowEchelon rref(const Matrix& m) {
  EchelonBuilder builder(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) builder.add(m.row(r));
  RowEchelon e = builder.reduced();
  Matrix padded(m.rows(), m.cols());
  for (std::size_t r = 0; r < e.reduced.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) padded(r, c) = e.reduced(r, c);
  return {std::move(padded), std::move(e.pivots)};
}

std::size_t rank(const Matrix& m) {
  // Stream whichever side is shorter as the echelon width.
  if (m.cols() <= m.rows()) {
    EchelonBuilder builder(m.cols());
    for (std::size_t r = 0; r < m.rows() && builder.rank() < m.cols(); ++r) builder.add(m.row(r));
    return builder.rank();
  }
  EchelonBuilder builder(m.rows());
  for (std::size_t c = 0; c < m.cols() && builder.rank() < m.rows(); ++c) builder.add(m.column(c));
  return builder.rank();
}

std::size_t rank(const SparseMatrix& m) {
  if (m.rows() <= m.cols()) {
    EchelonBuilder builder(m.rows());
    for (std::size_t c = 0; c < m.cols() && builder.rank() < m.rows(); ++c)
      builder.add_sparse(m.column(c));
    return builder.rank();
  }
  const SparseMatrix t = m.transpose();
  EchelonBuilder builder(m.cols());
  for (std::size_t r = 0; r < t.cols() && builder.rank() < m.cols(); ++r)
    builder.add_sparse(t.column(r));
  return builder.rank();
}

}  // namespace nilhodge
