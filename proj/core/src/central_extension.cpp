#include "nilhodge/central_extension.hpp"

#include <algorithm>
#include <string>

#include "nilhodge/exterior.hpp"
#include "nilhodge/lie_cohomology.hpp"

namespace nilhodge {
namespace {

std::size_t wedge_dim(std::size_t rank, long j) {
  return j < 0 ? 0 : binomial(rank, static_cast<std::size_t>(j));
}

std::pair<int, int> bidegree(const MultiIndex& monomial, std::size_t genus) {
  int holomorphic = 0;
  for (std::size_t i : monomial)
    if (i < genus) ++holomorphic;
  return {holomorphic, static_cast<int>(monomial.degree()) - holomorphic};
}

std::size_t hodge_dim(std::size_t genus, int p, int q) {
  if (p < 0 || q < 0) return 0;
  return binomial(genus, static_cast<std::size_t>(p)) * binomial(genus, static_cast<std::size_t>(q));
}

// Rank of ∧cl restricted to the bidegree-(p, j-p) part of Λ^j. For a (1,1)
// class this block is all of ∧cl that lands in bidegree (p+1, j-p+1).
std::size_t block_rank(const ExtensionDatum& datum, long j, int p) {
  if (j < 0 || p < 0 || p > j) return 0;
  const Matrix cup = cup_with_class(datum, j);
  if (cup.cols() == 0 || cup.rows() == 0) return 0;
  const ExteriorBasis domain(datum.rank(), static_cast<std::size_t>(j));
  std::vector<Vector> columns;
  for (std::size_t c = 0; c < domain.size(); ++c)
    if (bidegree(domain[c], datum.genus()).first == p) columns.push_back(cup.column(c));
  if (columns.empty()) return 0;
  return rank(Matrix::from_columns(cup.rows(), columns));
}

HodgePiece make_piece(int weight) {
  HodgePiece piece;
  piece.weight = weight;
  for (int p = weight; p >= 0; --p) piece.hodge_numbers[{p, weight - p}] = 0;
  return piece;
}

}  // namespace

ExtensionDatum::ExtensionDatum(std::size_t rank, bool hodge_typed, Vector cl)
    : rank_(rank), hodge_typed_(hodge_typed), cl_(std::move(cl)) {
  if (cl_.size() != binomial(rank_, 2)) {
    throw InvalidInput("extension class needs " + std::to_string(binomial(rank_, 2)) +
                       " coefficients, got " + std::to_string(cl_.size()));
  }
  if (hodge_typed_ && rank_ % 2 != 0) throw InvalidInput("hodge-typed extension needs even rank");
}

Rational ExtensionDatum::cl_coefficient(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  if (i > j) return -cl_coefficient(j, i);
  return cl_[wedge_rank(MultiIndex{i, j}, rank_)];
}

bool ExtensionDatum::is_type_11() const {
  if (!hodge_typed_) return false;
  const ExteriorBasis pairs(rank_, 2);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (cl_[p].is_zero()) continue;
    if (bidegree(pairs[p], genus()) != std::pair<int, int>{1, 1}) return false;
  }
  return true;
}

bool ExtensionDatum::is_conjugation_stable() const {
  if (!is_type_11()) return false;
  const std::size_t g = genus();
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      if (cl_coefficient(i, g + j) != cl_coefficient(j, g + i)) return false;
  return true;
}

Matrix cup_with_class(const ExtensionDatum& datum, long j) {
  const std::size_t r = datum.rank();
  const std::size_t rows = wedge_dim(r, j + 2);
  const std::size_t cols = wedge_dim(r, j);
  Matrix m(rows, cols);
  if (rows == 0 || cols == 0) return m;
  const auto degree = static_cast<std::size_t>(j);
  for (std::size_t c = 0; c < cols; ++c) {
    Vector e(cols);
    e[c] = 1;
    const Vector image = wedge(e, degree, datum.cl(), 2, r);
    for (std::size_t row = 0; row < rows; ++row) m(row, c) = image[row];
  }
  return m;
}

std::vector<std::size_t> gysin_dims(const ExtensionDatum& datum) {
  const std::size_t r = datum.rank();
  std::vector<std::size_t> dims;
  for (long k = 0; k <= static_cast<long>(r) + 1; ++k) {
    const std::size_t cokernel = wedge_dim(r, k) - rank(cup_with_class(datum, k - 2));
    const std::size_t kern = wedge_dim(r, k - 1) - rank(cup_with_class(datum, k - 1));
    dims.push_back(cokernel + kern);
  }
  return dims;
}

SurjectivityReport h2ab_to_h2_surjectivity(const ExtensionDatum& datum) {
  SurjectivityReport report;
  report.h2_abelian_dim = binomial(datum.rank(), 2);
  const auto dims = gysin_dims(datum);
  report.h2_dim = dims.size() > 2 ? dims[2] : 0;
  const Matrix on_h1 = cup_with_class(datum, 1);
  report.surjective = rank(on_h1) == on_h1.cols();
  return report;
}

std::size_t WeightGradedHodge::dim() const {
  std::size_t total = 0;
  for (const auto& p : pieces) total += p.dim;
  return total;
}

bool WeightGradedHodge::is_pure_of_weight(int weight) const {
  return std::all_of(pieces.begin(), pieces.end(),
                     [weight](const HodgePiece& p) { return p.weight == weight; });
}

WeightGradedHodge gysin_mhs(const ExtensionDatum& datum, std::size_t k) {
  if (!datum.hodge_typed()) throw InvalidInput("extension is not hodge-typed");
  if (!datum.is_type_11()) throw InvalidInput("cl not of type (1,1)");
  const std::size_t g = datum.genus();
  const int w = static_cast<int>(k);
  const long kk = static_cast<long>(k);
  WeightGradedHodge out;
  out.degree = k;

  HodgePiece quotient = make_piece(w);
  for (int p = 0; p <= w; ++p) {
    const int q = w - p;
    const std::size_t h = hodge_dim(g, p, q) - block_rank(datum, kk - 2, p - 1);
    quotient.hodge_numbers[{p, q}] = h;
    quotient.dim += h;
  }

  HodgePiece kernel_piece = make_piece(w + 1);
  for (int p = 0; p <= w - 1; ++p) {
    const int q = w - 1 - p;
    const std::size_t h = hodge_dim(g, p, q) - block_rank(datum, kk - 1, p);
    kernel_piece.hodge_numbers[{p + 1, q + 1}] = h;
    kernel_piece.dim += h;
  }

  if (quotient.dim > 0) out.pieces.push_back(std::move(quotient));
  if (kernel_piece.dim > 0) out.pieces.push_back(std::move(kernel_piece));

  const auto dims = gysin_dims(datum);
  const std::size_t expected = k < dims.size() ? dims[k] : 0;
  if (out.dim() != expected) throw Error("hodge pieces do not add up to dim H^" + std::to_string(k));
  return out;
}

bool purity_check_h2(const ExtensionDatum& datum) {
  return gysin_mhs(datum, 2).is_pure_of_weight(2);
}

CarlsonToledoReport carlson_toledo_check(const ExtensionDatum& datum) {
  if (datum.rank() < 1) throw InvalidInput("Carlson-Toledo check needs rank >= 1");
  CarlsonToledoReport report;
  report.h2_dim = gysin_dims(datum)[2];
  report.nonzero = report.h2_dim > 0;
  return report;
}

LieAlgebra associated_lie_algebra(const ExtensionDatum& datum) {
  const std::size_t r = datum.rank();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < r; ++i) labels.push_back("a" + std::to_string(i));
  labels.emplace_back("z");
  std::vector<BracketEntry> brackets;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const Rational c = datum.cl_coefficient(i, j);
      if (c.is_zero()) continue;
      Vector v(r + 1);
      v[r] = c;
      brackets.push_back({i, j, std::move(v)});
    }
  }
  return LieAlgebra(StructureConstants(r + 1, std::move(labels), std::move(brackets)));
}

Verdict nomizu_crosscheck(const ExtensionDatum& datum, const Budget& budget) {
  const auto gysin = gysin_dims(datum);
  const auto lie = betti_numbers(associated_lie_algebra(datum), budget);
  for (std::size_t k = 0; k < std::max(gysin.size(), lie.size()); ++k) {
    const std::size_t a = k < gysin.size() ? gysin[k] : 0;
    const std::size_t b = k < lie.size() ? lie[k] : 0;
    if (a != b) {
      return Verdict::fail("degree " + std::to_string(k) + ": gysin " + std::to_string(a) +
                           " vs lie " + std::to_string(b));
    }
  }
  return Verdict::pass();
}

}  // namespace nilhodge
