#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "nilhodge/matrix.hpp"

namespace nilhodge {

std::size_t binomial(std::size_t n, std::size_t k);

/// Strictly increasing list of generator indices: the basis monomial
/// e_{i_1} ∧ ... ∧ e_{i_k} of Λ^k.
class MultiIndex {
 public:
  MultiIndex() = default;
  /// Throws InvalidInput unless strictly increasing.
  explicit MultiIndex(std::vector<std::size_t> indices);
  MultiIndex(std::initializer_list<std::size_t> indices)
      : MultiIndex(std::vector<std::size_t>(indices)) {}

  std::size_t degree() const { return indices_.size(); }
  std::size_t operator[](std::size_t i) const { return indices_[i]; }
  const std::vector<std::size_t>& indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// All C(n,k) k-subsets of {0..n-1} in lexicographic order. This order is
/// the basis convention for Λ^k everywhere in the library.
std::vector<MultiIndex> wedge_basis(std::size_t n, std::size_t k);

/// Lexicographic position of `index` among the k-subsets of {0..n-1}.
std::size_t wedge_rank(const MultiIndex& index, std::size_t n);

/// Sorts `sequence` and returns the sign of the sorting permutation, or 0
/// when an index repeats (the monomial vanishes).
int sort_with_sign(std::vector<std::size_t>& sequence);

/// Λ^k over n generators with O(1) lookup in both directions.
class ExteriorBasis {
 public:
  ExteriorBasis(std::size_t generators, std::size_t degree);

  std::size_t generators() const { return generators_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<MultiIndex>& monomials() const { return monomials_; }

  std::size_t index_of(const MultiIndex& index) const { return wedge_rank(index, generators_); }

 private:
  std::size_t generators_;
  std::size_t degree_;
  std::vector<MultiIndex> monomials_;
};

/// a ∧ b for a ∈ Λ^p, b ∈ Λ^q over n generators, as a vector on Λ^{p+q}.
Vector wedge(std::span<const Rational> a, std::size_t p, std::span<const Rational> b,
             std::size_t q, std::size_t n);

/// Λ^k of an n × n matrix acting on Λ^k Q^n: entry (I, J) is the minor
/// det(A[I, J]).
Matrix exterior_power(const Matrix& a, std::size_t k);

/// Coefficient vector on Λ^k(N generators) of a vector given on Λ^k(n)
/// for n ≤ N, where the first n generators are shared.
Vector embed_wedge(std::span<const Rational> v, std::size_t k, std::size_t n, std::size_t big_n);

}  // namespace nilhodge
