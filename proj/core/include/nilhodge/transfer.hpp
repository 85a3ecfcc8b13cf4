#pragma once

#include <cstddef>
#include <vector>

#include "nilhodge/error.hpp"
#include "nilhodge/lie_algebra.hpp"
#include "nilhodge/matrix.hpp"

namespace nilhodge {

/// Checks that `elements` is a finite group of automorphisms of `target`.
/// A matrix M acts on L by φ(e_j) = Σ_i M(i, j) e_i.
Verdict validate_action(const LieAlgebra& target, const std::vector<Matrix>& elements);

/// A finite group acting on a Lie algebra by automorphisms, given by the
/// exhaustive list of its elements.
class FiniteGroupAction {
 public:
  /// Throws InvalidInput with the message of validate_action().
  FiniteGroupAction(LieAlgebra target, std::vector<Matrix> elements);

  const LieAlgebra& target() const { return target_; }
  const std::vector<Matrix>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

 private:
  LieAlgebra target_;
  std::vector<Matrix> elements_;
};

/// For each element φ, the matrix of Λ^k of the contragredient action
/// (φ⁻¹)ᵀ on H^k(L), in the cohomology_basis representatives.
std::vector<Matrix> induced_action_on_cohomology(const FiniteGroupAction& action, std::size_t k,
                                                 const Budget& budget = {});

/// (1/|G|) Σ_g g acting on H^k(L).
Matrix averaging_projector(const FiniteGroupAction& action, std::size_t k,
                           const Budget& budget = {});

/// dim H^k(L)^G for k = 0..dim L.
std::vector<std::size_t> invariant_dims(const FiniteGroupAction& action,
                                        const Budget& budget = {});

}  // namespace nilhodge
