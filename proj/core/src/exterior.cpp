#include "nilhodge/exterior.hpp"

#include <algorithm>

#include "nilhodge/error.hpp"
#include "nilhodge/subspace.hpp"

namespace nilhodge {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
  return c;
}

MultiIndex::MultiIndex(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  for (std::size_t i = 1; i < indices_.size(); ++i) {
    if (indices_[i - 1] >= indices_[i]) throw InvalidInput("multi-index is not strictly increasing");
  }
}

std::vector<MultiIndex> wedge_basis(std::size_t n, std::size_t k) {
  std::vector<MultiIndex> out;
  if (k > n) return out;
  out.reserve(binomial(n, k));
  std::vector<std::size_t> current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = i;
  while (true) {
    out.emplace_back(current);
    // Advance to the next k-subset in lexicographic order.
    std::size_t t = k;
    while (t > 0 && current[t - 1] == n - k + (t - 1)) --t;
    if (t == 0) break;
    ++current[t - 1];
    for (std::size_t s = t; s < k; ++s) current[s] = current[s - 1] + 1;
  }
  return out;
}

std::size_t wedge_rank(const MultiIndex& index, std::size_t n) {
  const std::size_t k = index.degree();
  std::size_t rank = 0;
  std::size_t next = 0;
  for (std::size_t t = 0; t < k; ++t) {
    if (index[t] >= n) throw InvalidInput("multi-index entry exceeds generator count");
    for (std::size_t v = next; v < index[t]; ++v) rank += binomial(n - 1 - v, k - 1 - t);
    next = index[t] + 1;
  }
  return rank;
}

int sort_with_sign(std::vector<std::size_t>& sequence) {
  int sign = 1;
  for (std::size_t i = 1; i < sequence.size(); ++i) {
    for (std::size_t j = i; j > 0 && sequence[j - 1] >= sequence[j]; --j) {
      if (sequence[j - 1] == sequence[j]) return 0;
      std::swap(sequence[j - 1], sequence[j]);
      sign = -sign;
    }
  }
  return sign;
}

ExteriorBasis::ExteriorBasis(std::size_t generators, std::size_t degree)
    : generators_(generators), degree_(degree), monomials_(wedge_basis(generators, degree)) {}

Vector wedge(std::span<const Rational> a, std::size_t p, std::span<const Rational> b,
             std::size_t q, std::size_t n) {
  const ExteriorBasis left(n, p);
  const ExteriorBasis right(n, q);
  if (a.size() != left.size() || b.size() != right.size())
    throw InvalidInput("wedge operand has the wrong length");
  Vector out(binomial(n, p + q));
  if (p + q > n) return out;
  std::vector<std::size_t> merged;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      merged = left[i].indices();
      merged.insert(merged.end(), right[j].begin(), right[j].end());
      const int sign = sort_with_sign(merged);
      if (sign == 0) continue;
      const std::size_t target = wedge_rank(MultiIndex(merged), n);
      Rational term = a[i] * b[j];
      if (sign < 0) out[target] -= term;
      else out[target] += term;
    }
  }
  return out;
}

Matrix exterior_power(const Matrix& a, std::size_t k) {
  if (a.rows() != a.cols()) throw InvalidInput("exterior power of a non-square matrix");
  const ExteriorBasis basis(a.rows(), k);
  Matrix out(basis.size(), basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      Matrix minor(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = a(basis[r][i], basis[c][j]);
      out(r, c) = determinant(minor);
    }
  }
  return out;
}

Vector embed_wedge(std::span<const Rational> v, std::size_t k, std::size_t n, std::size_t big_n) {
  if (big_n < n) throw InvalidInput("cannot embed into fewer generators");
  const ExteriorBasis small(n, k);
  if (v.size() != small.size()) throw InvalidInput("wedge vector has the wrong length");
  Vector out(binomial(big_n, k));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out[wedge_rank(small[i], big_n)] = v[i];
  }
  return out;
}

}  // namespace nilhodge
