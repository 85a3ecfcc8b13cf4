#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "nilhodge/error.hpp"
#include "nilhodge/lie_algebra.hpp"
#include "nilhodge/matrix.hpp"

namespace nilhodge {

/// A Z-central extension 1 → Z → Γ → A → 1 with A free abelian of the
/// given rank, described by its class cl ∈ Λ²H¹(A).
///
/// When hodge_typed, H¹(A) has rank 2g with basis z_1..z_g (holomorphic,
/// indices 0..g-1) followed by z̄_1..z̄_g (indices g..2g-1), and the
/// bidegree of a wedge monomial counts the indices on each side.
class ExtensionDatum {
 public:
  /// Throws InvalidInput if cl does not have C(rank, 2) entries or if a
  /// hodge-typed datum has odd rank.
  ExtensionDatum(std::size_t rank, bool hodge_typed, Vector cl);

  std::size_t rank() const { return rank_; }
  std::size_t genus() const { return rank_ / 2; }
  bool hodge_typed() const { return hodge_typed_; }
  const Vector& cl() const { return cl_; }
  /// Coefficient of e_i ∧ e_j, antisymmetric in (i, j).
  Rational cl_coefficient(std::size_t i, std::size_t j) const;

  /// Every nonzero coefficient sits on a pair (holomorphic, antiholomorphic).
  bool is_type_11() const;
  /// Type (1,1) with cl = Σ a_ij z_i ∧ z̄_j and (a_ij) symmetric, i.e. cl is
  /// i times a real class. Such classes give Hodge numbers with h^{p,q} = h^{q,p}.
  bool is_conjugation_stable() const;

 private:
  std::size_t rank_;
  bool hodge_typed_;
  Vector cl_;
};

/// ω ↦ ω ∧ cl from Λ^j to Λ^{j+2}; dimensions outside 0..rank are 0.
Matrix cup_with_class(const ExtensionDatum& datum, long j);

/// dim H^k(Γ) for k = 0..rank+1 from the degenerate Hochschild–Serre
/// sequence: coker(∧cl on H^{k-2}) plus ker(∧cl on H^{k-1}).
std::vector<std::size_t> gysin_dims(const ExtensionDatum& datum);

struct SurjectivityReport {
  std::size_t h2_abelian_dim = 0;
  std::size_t h2_dim = 0;
  bool surjective = false;
};

/// H²(Γ_ab) → H²(Γ) is onto iff ∧cl is injective on H¹.
SurjectivityReport h2ab_to_h2_surjectivity(const ExtensionDatum& datum);

/// One graded piece Gr^W_weight H^k(Γ); hodge_numbers maps (p, q) with
/// p + q = weight to h^{p,q}, zeros included.
struct HodgePiece {
  int weight = 0;
  std::size_t dim = 0;
  std::map<std::pair<int, int>, std::size_t> hodge_numbers;
};

struct WeightGradedHodge {
  std::size_t degree = 0;
  std::vector<HodgePiece> pieces;

  std::size_t dim() const;
  bool is_pure_of_weight(int weight) const;
};

/// Weight k: H^k(A) / (H^{k-2}(A) ∧ cl). Weight k+1: ker(∧cl on H^{k-1}(A))
/// shifted by (1,1). Empty pieces are omitted. Throws InvalidInput if the
/// datum is not hodge-typed or "cl not of type (1,1)".
WeightGradedHodge gysin_mhs(const ExtensionDatum& datum, std::size_t k);

/// H²(Γ) is pure of weight 2.
bool purity_check_h2(const ExtensionDatum& datum);

struct CarlsonToledoReport {
  std::size_t h2_dim = 0;
  bool nonzero = false;
};

CarlsonToledoReport carlson_toledo_check(const ExtensionDatum& datum);

/// Basis a_0..a_{rank-1}, z with [a_i, a_j] = cl_ij z.
LieAlgebra associated_lie_algebra(const ExtensionDatum& datum);

/// betti_numbers(associated_lie_algebra) == gysin_dims, degree by degree.
Verdict nomizu_crosscheck(const ExtensionDatum& datum, const Budget& budget = {});

}  // namespace nilhodge
