#include "nilhodge/subspace.hpp"

#include "nilhodge/error.hpp"

namespace nilhodge {
namespace {

// One basis vector per free column, read off the reduced echelon form.
Subspace null_space(const RowEchelon& e, std::size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

}  // namespace

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vector e(ambient_dim);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vector> vectors) {
  EchelonBuilder builder(ambient_dim);
  for (const auto& v : vectors) {
    if (builder.rank() == ambient_dim) break;
    builder.add(v);
  }
  return from_echelon(ambient_dim, builder.reduced());
}

Subspace Subspace::from_echelon(std::size_t ambient_dim, const RowEchelon& echelon) {
  Subspace s(ambient_dim);
  for (std::size_t r = 0; r < echelon.rank(); ++r) {
    const auto row = echelon.reduced.row(r);
    s.basis_.emplace_back(row.begin(), row.end());
  }
  s.pivots_ = echelon.pivots;
  return s;
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw InvalidInput("vector length does not match ambient space");
  Vector w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational factor = w[pivots_[i]];
    if (factor.is_zero()) continue;
    for (std::size_t c = pivots_[i]; c < ambient_dim_; ++c)
      w[c].subtract_product(factor, basis_[i][c]);
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim_ != b.ambient_dim_) throw InvalidInput("subspace sum across ambient spaces");
  std::vector<Vector> all = a.basis_;
  all.insert(all.end(), b.basis_.begin(), b.basis_.end());
  return Subspace::span(a.ambient_dim_, all);
}

Subspace kernel(const Matrix& m) {
  const RowEchelon e = rref(m);
  return null_space(e, m.cols());
}

Subspace kernel(const SparseMatrix& m) {
  // Rows of m are the columns of its transpose; stream them.
  const SparseMatrix t = m.transpose();
  EchelonBuilder builder(m.cols());
  for (std::size_t r = 0; r < t.cols() && builder.rank() < m.cols(); ++r)
    builder.add_sparse(t.column(r));
  const RowEchelon e = builder.reduced();
  return null_space(e, m.cols());
}

Subspace image(const Matrix& m) {
  std::vector<Vector> columns;
  columns.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) columns.push_back(m.column(c));
  return Subspace::span(m.rows(), columns);
}

Subspace image(const SparseMatrix& m) {
  EchelonBuilder builder(m.rows());
  for (std::size_t c = 0; c < m.cols() && builder.rank() < m.rows(); ++c)
    builder.add_sparse(m.column(c));
  return Subspace::from_echelon(m.rows(), builder.reduced());
}

std::size_t quotient_dim(const Subspace& big, const Subspace& small) {
  if (!big.contains(small)) throw InvalidInput("not a subspace");
  return big.dim() - small.dim();
}

std::vector<Vector> complement_basis(const Subspace& big, const Subspace& small) {
  if (!big.contains(small)) throw InvalidInput("not a subspace");
  EchelonBuilder builder(big.ambient_dim());
  for (const auto& v : small.basis()) builder.add(v);
  std::vector<Vector> out;
  for (const auto& v : big.basis()) {
    if (builder.rank() == big.dim()) break;
    if (builder.add(v)) out.push_back(v);
  }
  return out;
}

std::optional<Vector> solve(const Matrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw InvalidInput("right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const RowEchelon e = rref(aug);
  Vector x(a.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] == a.cols()) return std::nullopt;
    x[e.pivots[r]] = e.reduced(r, a.cols());
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const RowEchelon e = rref(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw InvalidInput("singular matrix");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    const Rational inv = Rational(1) / a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Rational factor = a(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) a(r, k).subtract_product(factor, a(c, k));
    }
  }
  return det;
}

Coordinates::Coordinates(std::size_t ambient_dim, std::vector<Vector> family)
    : ambient_dim_(ambient_dim), family_(std::move(family)) {
  const std::size_t m = family_.size();
  // Rows of the ambient space on which the family is already independent.
  const Matrix a_t = Matrix::from_rows(ambient_dim_, family_);
  const RowEchelon e = rref(a_t);
  if (e.rank() != m) throw Error("coordinate family is linearly dependent");
  rows_ = e.pivots;
  Matrix square(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) square(i, j) = family_[j][rows_[i]];
  inverse_ = m == 0 ? Matrix() : inverse(square);
}

std::optional<Vector> Coordinates::of(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw InvalidInput("vector length does not match ambient space");
  const std::size_t m = family_.size();
  Vector restricted(m);
  for (std::size_t i = 0; i < m; ++i) restricted[i] = v[rows_[i]];
  Vector coords = m == 0 ? Vector() : inverse_.apply(restricted);
  Vector check(ambient_dim_);
  for (std::size_t j = 0; j < m; ++j) {
    if (coords[j].is_zero()) continue;
    for (std::size_t r = 0; r < ambient_dim_; ++r)
      if (!family_[j][r].is_zero()) check[r] += coords[j] * family_[j][r];
  }
  for (std::size_t r = 0; r < ambient_dim_; ++r)
    if (check[r] != v[r]) return std::nullopt;
  return coords;
}

}  // namespace nilhodge
