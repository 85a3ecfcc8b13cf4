#include "nilhodge/minimal_model.hpp"

#include <algorithm>
#include <string>

#include "nilhodge/exterior.hpp"
#include "nilhodge/subspace.hpp"

namespace nilhodge {
namespace {

std::string stage_text(std::size_t stage) { return "stage " + std::to_string(stage); }

// Structure constants dual to the tower up to `stage`, without the Jacobi check.
StructureConstants dual_constants(const HirschTower& tower, std::size_t stage) {
  const std::size_t total = tower.total_generators(stage);
  const ExteriorBasis pairs(total, 2);
  std::vector<Vector> brackets(pairs.size(), Vector(total));
  for (std::size_t g = 0; g < total; ++g) {
    const Vector d = tower.differential(g, stage);
    for (std::size_t p = 0; p < d.size(); ++p)
      if (!d[p].is_zero()) brackets[p][g] = -d[p];
  }
  std::vector<BracketEntry> entries;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const bool nonzero = std::any_of(brackets[p].begin(), brackets[p].end(),
                                     [](const Rational& x) { return !x.is_zero(); });
    if (nonzero) entries.push_back({pairs[p][0], pairs[p][1], std::move(brackets[p])});
  }
  return StructureConstants(total, {}, std::move(entries));
}

struct StageH2 {
  CohomologyBasis h2;
  Matrix rho;
};

StageH2 stage_h2_with_map(const HirschTower& tower, std::size_t stage, const CupData& cup,
                          const Budget& budget) {
  CohomologyBasis h2 = tower_h2(tower, stage, budget);
  const std::size_t total = tower.total_generators(stage);
  const std::size_t b1 = cup.b1();
  const ExteriorBasis h1_pairs(b1, 2);
  Matrix rho(cup.b2(), h2.dim());
  for (std::size_t c = 0; c < h2.dim(); ++c) {
    // Later generators map to 0, so only the Λ²H¹ component survives.
    const Vector& rep = h2.representatives()[c];
    Vector component(h1_pairs.size());
    for (std::size_t p = 0; p < h1_pairs.size(); ++p)
      component[p] = rep[wedge_rank(h1_pairs[p], total)];
    const Vector image = cup.cup().apply(component);
    for (std::size_t r = 0; r < cup.b2(); ++r) rho(r, c) = image[r];
  }
  return {std::move(h2), std::move(rho)};
}

}  // namespace

CupData::CupData(std::size_t b1, std::size_t b2, Matrix cup,
                 std::optional<std::pair<std::size_t, std::size_t>> hodge_split)
    : b1_(b1), b2_(b2), cup_(std::move(cup)), hodge_split_(hodge_split) {
  if (b2_ == 0 && cup_.rows() == 0) cup_ = Matrix(0, binomial(b1_, 2));
  if (cup_.rows() != b2_ || cup_.cols() != binomial(b1_, 2)) {
    throw InvalidInput("cup matrix must be " + std::to_string(b2_) + " x " +
                       std::to_string(binomial(b1_, 2)));
  }
  if (hodge_split_ && hodge_split_->first + hodge_split_->second != b1_)
    throw InvalidInput("hodge split does not sum to b1");
}

HirschTower::HirschTower(std::vector<TowerStage> stages, StopReason stop)
    : stages_(std::move(stages)), stop_(stop) {
  std::size_t total = 0;
  for (std::size_t s = 0; s < stages_.size(); ++s) {
    const TowerStage& stage = stages_[s];
    if (stage.first_generator != total)
      throw InvalidInput(stage_text(s + 1) + " does not start after the previous stage");
    for (const auto& d : stage.differentials) {
      if (d.size() != binomial(total, 2))
        throw InvalidInput(stage_text(s + 1) + " differential is not in Λ² of earlier generators");
    }
    total += stage.size();
  }
}

std::size_t HirschTower::total_generators(std::size_t stage) const {
  if (stage > stages_.size()) throw InvalidInput(stage_text(stage) + " does not exist");
  std::size_t total = 0;
  for (std::size_t s = 0; s < stage; ++s) total += stages_[s].size();
  return total;
}

std::size_t HirschTower::weight_of(std::size_t generator) const {
  for (const auto& stage : stages_) {
    if (generator < stage.first_generator + stage.size()) return stage.weight;
  }
  throw InvalidInput("generator index out of range");
}

Vector HirschTower::differential(std::size_t generator, std::size_t stage) const {
  const std::size_t total = total_generators(stage);
  if (generator >= total) throw InvalidInput("generator not present at " + stage_text(stage));
  for (const auto& s : stages_) {
    if (generator < s.first_generator + s.size()) {
      return embed_wedge(s.differentials[generator - s.first_generator], 2, s.first_generator, total);
    }
  }
  throw InvalidInput("generator index out of range");
}

Verdict HirschTower::check() const {
  if (stages_.empty()) return Verdict::pass();
  for (const auto& d : stages_.front().differentials) {
    for (const auto& x : d)
      if (!x.is_zero()) return Verdict::fail("stage 1 differential is not zero");
  }
  const std::size_t total = total_generators();
  const SparseMatrix d2 = ce_differential_sparse(dual_constants(*this, stages_.size()), 2);
  for (std::size_t g = 0; g < total; ++g) {
    const Vector dd = d2.apply(differential(g, stages_.size()));
    for (const auto& x : dd)
      if (!x.is_zero()) return Verdict::fail("d^2 != 0 on generator " + std::to_string(g));
  }
  return Verdict::pass();
}

LieAlgebra dual_lie_algebra(const HirschTower& tower, std::size_t stage) {
  return LieAlgebra(dual_constants(tower, stage));
}

CohomologyBasis tower_h2(const HirschTower& tower, std::size_t stage, const Budget& budget) {
  return cohomology_basis(dual_lie_algebra(tower, stage), 2, budget);
}

Matrix tower_h2_map(const HirschTower& tower, std::size_t stage, const CupData& cup,
                    const Budget& budget) {
  if (tower.stage_count() == 0 || tower.stages().front().size() != cup.b1())
    throw InvalidInput("tower does not start from the cup data's H¹");
  return stage_h2_with_map(tower, stage, cup, budget).rho;
}

HirschTower build_tower(const CupData& cup, const TowerOptions& options) {
  if (options.max_stage < 1) throw InvalidInput("max_stage must be at least 1");
  std::vector<TowerStage> stages{{1, 0, std::vector<Vector>(cup.b1())}};
  if (binomial(cup.b1(), 2) > options.budget.max_dimension)
    return HirschTower(std::move(stages), StopReason::BudgetExceeded);

  for (std::size_t stage = 1;; ++stage) {
    const HirschTower current(stages);
    const StageH2 step = stage_h2_with_map(current, stage, cup, options.budget);
    const Subspace classes = kernel(step.rho);
    if (classes.is_zero()) return HirschTower(std::move(stages), StopReason::Stabilized);
    if (stage == options.max_stage) return HirschTower(std::move(stages), StopReason::StageLimit);

    const std::size_t total = current.total_generators();
    if (binomial(total + classes.dim(), 2) > options.budget.max_dimension)
      return HirschTower(std::move(stages), StopReason::BudgetExceeded);

    // Lift each kernel class to a cocycle via the representatives.
    TowerStage next{stage + 1, total, {}};
    for (const auto& coords : classes.basis()) {
      Vector d(binomial(total, 2));
      for (std::size_t j = 0; j < coords.size(); ++j) {
        if (coords[j].is_zero()) continue;
        const Vector& rep = step.h2.representatives()[j];
        for (std::size_t p = 0; p < d.size(); ++p)
          if (!rep[p].is_zero()) d[p] += coords[j] * rep[p];
      }
      next.differentials.push_back(std::move(d));
    }
    stages.push_back(std::move(next));
  }
}

LieTower dual_lie_tower(const HirschTower& tower) {
  LieTower out;
  for (std::size_t stage = 1; stage <= tower.stage_count(); ++stage) {
    out.algebras.push_back(dual_lie_algebra(tower, stage));
    if (stage > 1) {
      const std::size_t small = tower.total_generators(stage - 1);
      const std::size_t big = tower.total_generators(stage);
      Matrix projection(small, big);
      for (std::size_t i = 0; i < small; ++i) projection(i, i) = 1;
      out.projections.push_back(std::move(projection));
    }
  }
  return out;
}

Verdict roundtrip_check(const HirschTower& tower) {
  const LieTower dual = dual_lie_tower(tower);
  for (std::size_t stage = 1; stage <= tower.stage_count(); ++stage) {
    const std::size_t total = tower.total_generators(stage);
    std::vector<Vector> columns;
    for (std::size_t g = 0; g < total; ++g) columns.push_back(tower.differential(g, stage));
    const Matrix expected = Matrix::from_columns(binomial(total, 2), columns);
    if (ce_differential(dual.algebras[stage - 1], 1) != expected)
      return Verdict::fail("dual mismatch at " + stage_text(stage));
  }
  return Verdict::pass();
}

Verdict central_kernels(const LieTower& tower) {
  for (std::size_t i = 0; i < tower.projections.size(); ++i) {
    const Matrix& p = tower.projections[i];
    const LieAlgebra& big = tower.algebras[i + 1];
    if (rank(p) != tower.algebras[i].dim())
      return Verdict::fail("projection onto stage " + std::to_string(i + 1) + " is not surjective");
    const Subspace fibre = kernel(p);
    for (const auto& k : fibre.basis()) {
      for (std::size_t j = 0; j < big.dim(); ++j) {
        Vector e(big.dim());
        e[j] = 1;
        const Vector b = big.bracket(k, e);
        for (const auto& x : b)
          if (!x.is_zero())
            return Verdict::fail("kernel of projection onto stage " + std::to_string(i + 1) +
                                 " is not central");
      }
    }
  }
  return Verdict::pass();
}

}  // namespace nilhodge
