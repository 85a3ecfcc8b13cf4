#include "nilhodge/lie_cohomology.hpp"

#include <algorithm>
#include <utility>

#include "nilhodge/exterior.hpp"

namespace nilhodge {
namespace {

struct FormTerm {
  std::size_t i;
  std::size_t j;
  Rational value;
};

// d of each dual basis 1-form: dξ_g = -Σ_{i<j} c_ij^g e_i ∧ e_j.
std::vector<std::vector<FormTerm>> one_form_differentials(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  std::vector<std::vector<FormTerm>> d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t g = 0; g < n; ++g) {
        const Rational& c = sc.coefficient(i, j, g);
        if (!c.is_zero()) d[g].push_back({i, j, -c});
      }
  return d;
}

std::vector<Subspace> central_series_until_stable(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<Subspace> terms{Subspace::whole(n)};
  while (!terms.back().is_zero()) {
    std::vector<Vector> spanning;
    for (const auto& v : terms.back().basis()) {
      for (std::size_t j = 0; j < n; ++j) {
        Vector e(n);
        e[j] = 1;
        spanning.push_back(algebra.bracket(v, e));
      }
    }
    Subspace next = Subspace::span(n, spanning);
    if (next.dim() == terms.back().dim()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

}  // namespace

Verdict validate(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  // Sparse bracket table: bracket[i * n + j] lists the nonzero (s, c_ij^s).
  std::vector<std::vector<std::pair<std::size_t, Rational>>> bracket(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t s = 0; s < n; ++s)
        if (!sc.coefficient(i, j, s).is_zero()) bracket[i * n + j].emplace_back(s, sc.coefficient(i, j, s));

  Vector sum(n);
  const auto add_nested = [&](std::size_t a, std::size_t b, std::size_t c) {
    // += [[e_a, e_b], e_c]
    for (const auto& [s, coeff] : bracket[a * n + b])
      for (const auto& [t, inner] : bracket[s * n + c]) sum[t] += coeff * inner;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::fill(sum.begin(), sum.end(), Rational());
        add_nested(i, j, k);
        add_nested(j, k, i);
        add_nested(k, i, j);
        for (const auto& x : sum) {
          if (!x.is_zero()) {
            return Verdict::fail("jacobi violated at (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) + ")");
          }
        }
      }
  return Verdict::pass();
}

CohomologyBasis::CohomologyBasis(std::size_t degree, Subspace cocycles, Subspace coboundaries)
    : degree_(degree),
      cocycles_(std::move(cocycles)),
      coboundaries_(std::move(coboundaries)),
      representatives_(complement_basis(cocycles_, coboundaries_)),
      coordinates_(cocycles_.ambient_dim(), [this] {
        std::vector<Vector> family = representatives_;
        family.insert(family.end(), coboundaries_.basis().begin(), coboundaries_.basis().end());
        return family;
      }()) {}

Vector CohomologyBasis::class_of(std::span<const Rational> cocycle) const {
  auto coords = coordinates_.of(cocycle);
  if (!coords) throw Error("vector is not a cocycle in degree " + std::to_string(degree_));
  coords->resize(representatives_.size());
  return *coords;
}

std::vector<std::size_t> LowerCentralSeries::dims() const {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(t.dim());
  return out;
}

LowerCentralSeries lower_central_series(const LieAlgebra& algebra) {
  LowerCentralSeries series{central_series_until_stable(algebra)};
  if (!series.terms.back().is_zero()) throw InvalidInput("not nilpotent");
  return series;
}

bool is_nilpotent(const LieAlgebra& algebra) {
  return central_series_until_stable(algebra).back().is_zero();
}

Subspace derived_subalgebra(const LieAlgebra& algebra) {
  const std::size_t n = algebra.dim();
  std::vector<Vector> spanning;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) spanning.push_back(algebra.bracket(i, j));
  return Subspace::span(n, spanning);
}

LieAlgebra abelianization(const LieAlgebra& algebra) {
  const Subspace derived = derived_subalgebra(algebra);
  std::vector<bool> is_pivot(algebra.dim(), false);
  for (std::size_t p : derived.pivots()) is_pivot[p] = true;
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < algebra.dim(); ++j)
    if (!is_pivot[j]) labels.push_back(algebra.labels()[j]);
  const std::size_t m = labels.size();
  return LieAlgebra(StructureConstants(m, std::move(labels), {}));
}

SparseMatrix ce_differential_sparse(const StructureConstants& sc, std::size_t k) {
  const std::size_t n = sc.dim();
  if (k > n) throw InvalidInput("cochain degree exceeds the algebra dimension");
  const auto d1 = one_form_differentials(sc);
  const ExteriorBasis domain(n, k);
  SparseMatrix d(binomial(n, k + 1), domain.size());
  std::vector<std::size_t> sequence;
  for (std::size_t col = 0; col < domain.size(); ++col) {
    const MultiIndex& monomial = domain[col];
    std::vector<SparseEntry> terms;
    for (std::size_t t = 0; t < k; ++t) {
      // d passes over t degree-one factors before reaching position t.
      const bool odd = t % 2 == 1;
      for (const auto& term : d1[monomial[t]]) {
        sequence.clear();
        sequence.insert(sequence.end(), monomial.begin(), monomial.begin() + static_cast<std::ptrdiff_t>(t));
        sequence.push_back(term.i);
        sequence.push_back(term.j);
        sequence.insert(sequence.end(), monomial.begin() + static_cast<std::ptrdiff_t>(t) + 1, monomial.end());
        const int sign = sort_with_sign(sequence);
        if (sign == 0) continue;
        const bool negative = (sign < 0) != odd;
        terms.push_back({wedge_rank(MultiIndex(sequence), n), negative ? -term.value : term.value});
      }
    }
    d.set_column(col, compress(std::move(terms)));
  }
  return d;
}

Matrix ce_differential(const StructureConstants& sc, std::size_t k) {
  return ce_differential_sparse(sc, k).to_dense();
}

Matrix ce_differential(const LieAlgebra& algebra, std::size_t k) {
  return ce_differential(algebra.constants(), k);
}

std::vector<std::size_t> betti_numbers(const LieAlgebra& algebra, const Budget& budget) {
  const std::size_t n = algebra.dim();
  for (std::size_t k = 0; k <= n; ++k) budget.check(binomial(n, k), "cochain space");
  std::vector<std::size_t> ranks(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) ranks[k] = rank(ce_differential_sparse(algebra.constants(), k));
  std::vector<std::size_t> betti(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    betti[k] = binomial(n, k) - ranks[k] - (k == 0 ? 0 : ranks[k - 1]);
  return betti;
}

CohomologyBasis cohomology_basis(const LieAlgebra& algebra, std::size_t k, const Budget& budget) {
  const std::size_t n = algebra.dim();
  if (k > n) throw InvalidInput("cohomology degree exceeds the algebra dimension");
  budget.check(binomial(n, k), "cochain space");
  Subspace cocycles = kernel(ce_differential_sparse(algebra.constants(), k));
  Subspace coboundaries =
      k == 0 ? Subspace(1) : image(ce_differential_sparse(algebra.constants(), k - 1));
  return CohomologyBasis(k, std::move(cocycles), std::move(coboundaries));
}

Matrix restriction_to_abelianization_map(const LieAlgebra& algebra, const Budget& budget) {
  const std::size_t n = algebra.dim();
  const Subspace derived = derived_subalgebra(algebra);
  // Forms on L/[L,L] pulled back to L: the functionals vanishing on [L,L].
  const Subspace annihilator = kernel(Matrix::from_rows(n, derived.basis()));
  const CohomologyBasis h2 = cohomology_basis(algebra, 2, budget);
  const auto& forms = annihilator.basis();
  const std::size_t m = forms.size();
  Matrix map(h2.dim(), binomial(m, 2));
  std::size_t col = 0;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b, ++col) {
      const Vector product = wedge(forms[a], 1, forms[b], 1, n);
      const Vector cls = h2.class_of(product);
      for (std::size_t r = 0; r < cls.size(); ++r) map(r, col) = cls[r];
    }
  }
  return map;
}

FormalityReport is_one_formal(const LieAlgebra& algebra, const Budget& budget) {
  if (!is_nilpotent(algebra)) throw InvalidInput("not nilpotent");
  const Matrix map = restriction_to_abelianization_map(algebra, budget);
  FormalityReport report;
  report.h2_abelianization_dim = map.cols();
  report.h2_dim = map.rows();
  report.image_dim = rank(map);
  report.one_formal = report.image_dim == report.h2_dim;
  return report;
}

long euler_characteristic(const LieAlgebra& algebra, const Budget& budget) {
  long chi = 0;
  const auto betti = betti_numbers(algebra, budget);
  for (std::size_t k = 0; k < betti.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(betti[k]);
  return chi;
}

}  // namespace nilhodge
