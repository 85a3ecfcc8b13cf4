#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "nilhodge/rational.hpp"

namespace nilhodge {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Throws InvalidInput unless entries.size() == rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors, each of length `rows`.
  static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);
  static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  Vector column(std::size_t c) const;
  const std::vector<Rational>& entries() const { return entries_; }

  Matrix transpose() const;
  bool is_zero() const;
  Vector apply(std::span<const Rational> v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

struct SparseEntry {
  std::size_t index;
  Rational value;
};
using SparseVector = std::vector<SparseEntry>;

/// Column-major sparse storage for differentials whose codomain is too
/// large to hold densely (e.g. d : Λ² → Λ³ on a 60-generator tower).
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Column entries must be sorted by row index with no zeros or repeats.
  void set_column(std::size_t c, SparseVector entries);
  const SparseVector& column(std::size_t c) const { return columns_[c]; }

  SparseMatrix transpose() const;
  Matrix to_dense() const;
  Vector apply(std::span<const Rational> v) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<SparseVector> columns_;
};

/// Sorts by index, merges repeated indices and drops zeros.
SparseVector compress(std::vector<SparseEntry> terms);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Incremental Gaussian elimination: rows are fed one at a time and only
/// the independent ones are kept, so memory is bounded by rank × cols no
/// matter how many rows are streamed.
class EchelonBuilder {
 public:
  explicit EchelonBuilder(std::size_t cols);

  /// Returns true when `row` was independent of the rows kept so far.
  bool add(Vector row);
  bool add(std::span<const Rational> row) { return add(Vector(row.begin(), row.end())); }
  bool add_sparse(const SparseVector& row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Reduced row echelon form of the span (pivot rows only, sorted by pivot).
  RowEchelon reduced() const;

 private:
  struct PivotRow {
    std::size_t pivot;
    Vector values;
    std::vector<std::size_t> support;
  };

  std::size_t cols_;
  std::vector<PivotRow> rows_;
  std::vector<std::ptrdiff_t> row_of_pivot_;
};

/// Reduced row echelon form; zero rows are kept at the bottom so the shape
/// of the result matches the input.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::size_t rank(const SparseMatrix& m);

}  // namespace nilhodge
