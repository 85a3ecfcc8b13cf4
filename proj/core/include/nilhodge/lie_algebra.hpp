#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nilhodge/matrix.hpp"

namespace nilhodge {

/// One stored bracket [e_i, e_j] = Σ_k value[k] e_k with i < j.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  Vector value;
};

/// Structure constants of a finite-dimensional algebra with an
/// antisymmetric bracket. Shape is checked here; the Jacobi identity is
/// not (see validate() and LieAlgebra).
class StructureConstants {
 public:
  explicit StructureConstants(std::size_t dim);
  /// Throws InvalidInput when i >= j, an index is out of range, a pair is
  /// given twice, a value has the wrong length or the label count is off.
  /// Empty `labels` means e0, e1, ...
  StructureConstants(std::size_t dim, std::vector<std::string> labels,
                     std::vector<BracketEntry> brackets);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Coefficient of e_k in [e_i, e_j], for any i, j.
  const Rational& coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    return table_[(i * dim_ + j) * dim_ + k];
  }
  Vector bracket(std::size_t i, std::size_t j) const;
  Vector bracket(std::span<const Rational> u, std::span<const Rational> v) const;

  /// Nonzero brackets with i < j, ordered by (i, j).
  std::vector<BracketEntry> entries() const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<Rational> table_;
};

/// A Lie algebra over Q: structure constants that satisfy Jacobi.
/// Immutable; every instance has been validated.
class LieAlgebra {
 public:
  /// Throws InvalidInput("jacobi violated at (i,j,k)").
  explicit LieAlgebra(StructureConstants constants);

  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return constants_.dim(); }
  const std::vector<std::string>& labels() const { return constants_.labels(); }
  const StructureConstants& constants() const { return constants_; }

  const Rational& coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_.coefficient(i, j, k);
  }
  Vector bracket(std::size_t i, std::size_t j) const { return constants_.bracket(i, j); }
  Vector bracket(std::span<const Rational> u, std::span<const Rational> v) const {
    return constants_.bracket(u, v);
  }
  bool is_abelian() const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  StructureConstants constants_;
};

}  // namespace nilhodge
