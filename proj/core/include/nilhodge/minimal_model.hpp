#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nilhodge/error.hpp"
#include "nilhodge/lie_algebra.hpp"
#include "nilhodge/lie_cohomology.hpp"
#include "nilhodge/matrix.hpp"

namespace nilhodge {

/// H¹, H² and the cup product Λ²H¹ → H² of a formal target algebra.
class CupData {
 public:
  /// `cup` must be b2 × C(b1, 2); a Hodge split must sum to b1.
  CupData(std::size_t b1, std::size_t b2, Matrix cup,
          std::optional<std::pair<std::size_t, std::size_t>> hodge_split = std::nullopt);

  std::size_t b1() const { return b1_; }
  std::size_t b2() const { return b2_; }
  const Matrix& cup() const { return cup_; }
  const std::optional<std::pair<std::size_t, std::size_t>>& hodge_split() const {
    return hodge_split_;
  }

 private:
  std::size_t b1_;
  std::size_t b2_;
  Matrix cup_;
  std::optional<std::pair<std::size_t, std::size_t>> hodge_split_;
};

/// Generators adjoined at one stage of the tower. Each differential is a
/// vector on Λ² of the `first_generator` generators that existed before.
struct TowerStage {
  std::size_t weight;
  std::size_t first_generator;
  std::vector<Vector> differentials;

  std::size_t size() const { return differentials.size(); }
};

enum class StopReason { Stabilized, StageLimit, BudgetExceeded };

/// Degree-1 generated Hirsch tower M(1) ⊂ M(2) ⊂ ... with decomposable d.
class HirschTower {
 public:
  explicit HirschTower(std::vector<TowerStage> stages,
                       StopReason stop = StopReason::StageLimit);

  const std::vector<TowerStage>& stages() const { return stages_; }
  std::size_t stage_count() const { return stages_.size(); }
  StopReason stop() const { return stop_; }
  bool stabilized() const { return stop_ == StopReason::Stabilized; }

  /// Generators present in M(stage) (1-based stage).
  std::size_t total_generators(std::size_t stage) const;
  std::size_t total_generators() const { return total_generators(stages_.size()); }
  std::size_t weight_of(std::size_t generator) const;
  /// d of a generator as a vector on Λ² of all generators of M(stage).
  Vector differential(std::size_t generator, std::size_t stage) const;

  /// d²(g) = 0 for every generator and every d(g) lies in Λ² of earlier
  /// generators.
  Verdict check() const;

 private:
  std::vector<TowerStage> stages_;
  StopReason stop_;
};

struct TowerOptions {
  std::size_t max_stage = 6;
  Budget budget;
};

/// Inductive 1-minimal model of the formal algebra (H•, 0) described by
/// `cup`. Stops when the next kernel is zero (stabilized), at max_stage,
/// or when C(total generators, 2) would exceed the budget; the tower built
/// so far is returned in every case and stop() records why.
HirschTower build_tower(const CupData& cup, const TowerOptions& options = {});

/// Dual nilpotent Lie algebra of M(stage): [u, v] has coefficient
/// -(coefficient of u ∧ v in d g) on g.
LieAlgebra dual_lie_algebra(const HirschTower& tower, std::size_t stage);

/// H² of M(stage), computed as H² of its dual Lie algebra.
CohomologyBasis tower_h2(const HirschTower& tower, std::size_t stage, const Budget& budget = {});

/// ρ* : H²(M(stage)) → H², sending stage-1 generators to their H¹ classes
/// and later generators to 0. Rows: H² of the target; columns: the
/// representatives of tower_h2().
Matrix tower_h2_map(const HirschTower& tower, std::size_t stage, const CupData& cup,
                    const Budget& budget = {});

struct LieTower {
  std::vector<LieAlgebra> algebras;
  /// projections[i] : algebras[i + 1] → algebras[i].
  std::vector<Matrix> projections;
};

LieTower dual_lie_tower(const HirschTower& tower);

/// The CE differential of each dual stage must equal the tower's d on the
/// degree-1 generators.
Verdict roundtrip_check(const HirschTower& tower);

/// Kernel of each projection is central in the larger algebra.
Verdict central_kernels(const LieTower& tower);

}  // namespace nilhodge
