#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nilhodge/error.hpp"
#include "nilhodge/lie_algebra.hpp"
#include "nilhodge/subspace.hpp"

namespace nilhodge {

/// Checks Jacobi on every triple i < j < k; the message names the first
/// violated triple.
Verdict validate(const StructureConstants& constants);

/// Cocycles, coboundaries and a choice of representatives of H^k.
class CohomologyBasis {
 public:
  CohomologyBasis(std::size_t degree, Subspace cocycles, Subspace coboundaries);

  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return representatives_.size(); }
  const Subspace& cocycles() const { return cocycles_; }
  const Subspace& coboundaries() const { return coboundaries_; }
  /// Echelon vectors of the cocycle basis not already accounted for by the
  /// coboundaries.
  const std::vector<Vector>& representatives() const { return representatives_; }

  /// Coordinates of the class of `cocycle` in the representative basis.
  /// Throws Error if `cocycle` is not closed.
  Vector class_of(std::span<const Rational> cocycle) const;

 private:
  std::size_t degree_;
  Subspace cocycles_;
  Subspace coboundaries_;
  std::vector<Vector> representatives_;
  Coordinates coordinates_;
};

/// C^1 = L ⊇ C^2 = [L, L] ⊇ ... ending at the first zero term.
struct LowerCentralSeries {
  std::vector<Subspace> terms;

  std::size_t nilpotency_class() const { return terms.empty() ? 0 : terms.size() - 1; }
  std::vector<std::size_t> dims() const;
};

/// Throws InvalidInput("not nilpotent") when the series stalls at a
/// nonzero term.
LowerCentralSeries lower_central_series(const LieAlgebra& algebra);
bool is_nilpotent(const LieAlgebra& algebra);

/// [L, L] as a subspace of L.
Subspace derived_subalgebra(const LieAlgebra& algebra);

/// Abelian algebra on L / [L, L]. The quotient basis is the images of the
/// basis vectors e_j whose index is not a pivot of [L, L]; labels follow.
LieAlgebra abelianization(const LieAlgebra& algebra);

/// Matrix of d : Λ^k L* → Λ^{k+1} L* in lexicographic wedge bases, with
/// dξ(x, y) = -ξ([x, y]) on 1-forms extended as a degree +1 derivation.
/// Works on unvalidated constants so Jacobi ⟺ d² = 0 can be probed.
Matrix ce_differential(const StructureConstants& constants, std::size_t k);
Matrix ce_differential(const LieAlgebra& algebra, std::size_t k);
SparseMatrix ce_differential_sparse(const StructureConstants& constants, std::size_t k);

std::vector<std::size_t> betti_numbers(const LieAlgebra& algebra, const Budget& budget = {});
CohomologyBasis cohomology_basis(const LieAlgebra& algebra, std::size_t k,
                                 const Budget& budget = {});

/// H²(L/[L,L]) → H²(L) induced by the projection, in the representative
/// bases. Columns are indexed by pairs of the annihilator basis of [L, L]
/// (the closed 1-forms), rows by cohomology_basis(L, 2).
Matrix restriction_to_abelianization_map(const LieAlgebra& algebra, const Budget& budget = {});

struct FormalityReport {
  std::size_t h2_abelianization_dim = 0;
  std::size_t image_dim = 0;
  std::size_t h2_dim = 0;
  bool one_formal = false;
};

/// One-formal iff H²(L₁) → H²(L) is onto. Throws InvalidInput("not
/// nilpotent") for non-nilpotent algebras.
FormalityReport is_one_formal(const LieAlgebra& algebra, const Budget& budget = {});

long euler_characteristic(const LieAlgebra& algebra, const Budget& budget = {});

}  // namespace nilhodge
