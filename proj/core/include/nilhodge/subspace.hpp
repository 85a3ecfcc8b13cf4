#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nilhodge/matrix.hpp"

namespace nilhodge {

/// Linear subspace of Q^n held as the rows of its reduced row echelon
/// basis, so two equal subspaces always have identical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  static Subspace whole(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, std::span<const Vector> vectors);
  static Subspace from_echelon(std::size_t ambient_dim, const RowEchelon& echelon);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace kernel(const Matrix& m);
Subspace kernel(const SparseMatrix& m);
/// Column space, as a subspace of Q^rows.
Subspace image(const Matrix& m);
Subspace image(const SparseMatrix& m);

/// dim(big) - dim(small). Throws InvalidInput("not a subspace") unless
/// small ⊆ big.
std::size_t quotient_dim(const Subspace& big, const Subspace& small);

/// Vectors of big's echelon basis that extend a basis of small to a basis
/// of big, in echelon order. Their classes form a basis of big / small.
std::vector<Vector> complement_basis(const Subspace& big, const Subspace& small);

std::optional<Vector> solve(const Matrix& a, std::span<const Rational> b);
/// Throws InvalidInput("singular matrix").
Matrix inverse(const Matrix& m);
Rational determinant(const Matrix& m);

/// Coordinates with respect to a fixed linearly independent family of
/// vectors; the solve is factored once at construction.
class Coordinates {
 public:
  Coordinates(std::size_t ambient_dim, std::vector<Vector> family);

  std::size_t size() const { return family_.size(); }
  const std::vector<Vector>& family() const { return family_; }

  /// nullopt when v lies outside the span of the family.
  std::optional<Vector> of(std::span<const Rational> v) const;

 private:
  std::size_t ambient_dim_;
  std::vector<Vector> family_;
  std::vector<std::size_t> rows_;
  Matrix inverse_;
};

}  // namespace nilhodge
