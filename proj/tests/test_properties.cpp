#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "nilhodge/central_extension.hpp"
#include "nilhodge/exterior.hpp"
#include "nilhodge/lie_cohomology.hpp"
#include "nilhodge/minimal_model.hpp"
#include "nilhodge/transfer.hpp"
#include "support.hpp"

using namespace nilhodge;
using namespace testing_support;

namespace {

bool d_squared_zero(const StructureConstants& sc) {
  return (ce_differential(sc, 2) * ce_differential(sc, 1)).is_zero();
}

// Signed permutation matrices generate finite groups acting on abelian
// algebras; take the cyclic group of one.
std::vector<Matrix> cyclic_group(const Matrix& g) {
  std::vector<Matrix> out{Matrix::identity(g.rows())};
  for (Matrix p = g; !(p == out.front()); p = p * g) out.push_back(p);
  return out;
}

Matrix random_signed_permutation(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) m(perm[j], j) = (rng() % 2) ? 1 : -1;
  return m;
}

}  // namespace

TEST(Property, DSquaredZeroIffJacobi) {
  std::mt19937 rng(101);
  int lie = 0, not_lie = 0;
  for (int trial = 0; trial < 100; ++trial) {
    StructureConstants sc(1);
    if (trial % 2 == 0) {
      sc = random_nilpotent(rng, 2 + rng() % 2, 1 + rng() % 3).constants();
    } else {
      sc = random_constants(rng, 3 + rng() % 2, trial % 4 == 1 ? 0.85 : 0.5);
    }
    const bool jacobi = validate(sc).ok;
    EXPECT_EQ(jacobi, oracle::jacobi(to_oracle(sc)));
    EXPECT_EQ(jacobi, d_squared_zero(sc)) << "trial " << trial;
    (jacobi ? lie : not_lie)++;
  }
  EXPECT_GT(lie, 20);
  EXPECT_GT(not_lie, 20);
}

TEST(Property, PoincareDualityAndEulerOnNilpotentAlgebras) {
  std::mt19937 rng(102);
  for (int trial = 0; trial < 30; ++trial) {
    const LieAlgebra l = random_nilpotent(rng, 2 + rng() % 3, rng() % 4);
    ASSERT_TRUE(is_nilpotent(l));
    const auto b = betti_numbers(l);
    const std::size_t n = l.dim();
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(b[k], b[n - k]);
    EXPECT_EQ(euler_characteristic(l), 0);
    EXPECT_GE(b[1], 2u);
    // Carlson–Toledo on Lie inputs: b1 ≥ 1 forces b2 > 0.
    EXPECT_GT(b[2], 0u);
  }
}

TEST(Property, BettiMatchesOracle) {
  std::mt19937 rng(103);
  for (int trial = 0; trial < 12; ++trial) {
    const LieAlgebra l = random_nilpotent(rng, 2 + rng() % 2, 1 + rng() % 3);
    EXPECT_EQ(betti_numbers(l), oracle::betti(to_oracle(l.constants())));
    EXPECT_EQ(is_one_formal(l).image_dim, oracle::formality_image_dim(to_oracle(l.constants())));
  }
}

TEST(Property, FormalityImageIsBoundedAndMatchesRank) {
  std::mt19937 rng(104);
  for (int trial = 0; trial < 20; ++trial) {
    const LieAlgebra l = random_nilpotent(rng, 2 + rng() % 3, rng() % 3);
    const FormalityReport f = is_one_formal(l);
    EXPECT_LE(f.image_dim, std::min(f.h2_abelianization_dim, f.h2_dim));
    EXPECT_EQ(f.one_formal, f.image_dim == f.h2_dim);
    EXPECT_EQ(rank(restriction_to_abelianization_map(l)), f.image_dim);
  }
}

TEST(Property, NomizuAgreesWithGysin) {
  std::mt19937 rng(105);
  for (int trial = 0; trial < 50; ++trial) {
    const ExtensionDatum d = random_extension(rng, 1 + rng() % 8, 0.2 + 0.6 * (trial % 3) / 2.0);
    const Verdict v = nomizu_crosscheck(d);
    EXPECT_TRUE(v.ok) << v.message;
  }
}

TEST(Property, GysinMatchesOracleBetti) {
  std::mt19937 rng(106);
  for (int trial = 0; trial < 10; ++trial) {
    const ExtensionDatum d = random_extension(rng, 1 + rng() % 5);
    EXPECT_EQ(gysin_dims(d), oracle::betti(oracle::extension_algebra(cl_matrix(d))));
  }
}

TEST(Property, CarlsonToledoOnRandomExtensions) {
  std::mt19937 rng(107);
  for (int trial = 0; trial < 40; ++trial) {
    const ExtensionDatum d = random_extension(rng, 1 + rng() % 8, 0.5);
    const CarlsonToledoReport r = carlson_toledo_check(d);
    EXPECT_TRUE(r.nonzero);
    EXPECT_EQ(r.h2_dim, gysin_dims(d)[2]);
  }
}

TEST(Property, HodgeSymmetryAndSums) {
  std::mt19937 rng(108);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t g = 1 + rng() % 3;
    const ExtensionDatum d = random_type11(rng, g, true, 0.4);
    const auto dims = gysin_dims(d);
    for (std::size_t k = 0; k < dims.size(); ++k) {
      const WeightGradedHodge mhs = gysin_mhs(d, k);
      EXPECT_EQ(mhs.dim(), dims[k]);
      for (const auto& piece : mhs.pieces) {
        std::size_t total = 0;
        for (const auto& [pq, h] : piece.hodge_numbers) {
          EXPECT_EQ(h, piece.hodge_numbers.at({pq.second, pq.first}));
          total += h;
        }
        EXPECT_EQ(total, piece.dim);
      }
    }
  }
}

TEST(Property, HodgeNumbersMatchOracle) {
  std::mt19937 rng(109);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t g = 1 + rng() % 2;
    const ExtensionDatum d = random_type11(rng, g, trial % 2 == 0, 0.4);
    for (std::size_t k = 0; k <= 2 * g + 1; ++k) {
      const auto table = oracle::extension_hodge(cl_matrix(d), g, k);
      const WeightGradedHodge mhs = gysin_mhs(d, k);
      for (std::size_t w = 0; w < 2; ++w) {
        const int weight = static_cast<int>(k + w);
        const auto it = std::find_if(mhs.pieces.begin(), mhs.pieces.end(),
                                     [&](const HodgePiece& p) { return p.weight == weight; });
        for (int p = 0; p <= weight; ++p) {
          const std::size_t got = it == mhs.pieces.end() ? 0 : it->hodge_numbers.at({p, weight - p});
          EXPECT_EQ(got, table[w][static_cast<std::size_t>(p)]) << "k=" << k << " w=" << weight << " p=" << p;
        }
      }
    }
  }
}

TEST(Property, PurityIffInjectiveOnH1) {
  std::mt19937 rng(110);
  int pure = 0, mixed = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t g = 1 + rng() % 3;
    const ExtensionDatum d = random_type11(rng, g, trial % 2 == 0, trial % 3 == 0 ? 0.8 : 0.2);
    const bool injective = kernel(cup_with_class(d, 1)).is_zero();
    EXPECT_EQ(purity_check_h2(d), injective);
    EXPECT_EQ(h2ab_to_h2_surjectivity(d).surjective, injective);
    (injective ? pure : mixed)++;
  }
  EXPECT_GT(pure, 5);
  EXPECT_GT(mixed, 5);
}

TEST(Property, TowersPassStructuralChecks) {
  std::mt19937 rng(111);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t b1 = 2 + rng() % 2;
    const std::size_t pairs = binomial(b1, 2);
    const std::size_t b2 = rng() % (pairs + 1);
    Matrix cup(b2, pairs);
    for (std::size_t r = 0; r < b2; ++r)
      for (std::size_t c = 0; c < pairs; ++c) cup(r, c) = random_rational(rng, 2, 2, 0.3);
    const CupData data(b1, b2, cup);
    const HirschTower t = build_tower(data, TowerOptions{4, Budget{400}});
    EXPECT_TRUE(t.check().ok);
    EXPECT_TRUE(roundtrip_check(t).ok);
    EXPECT_TRUE(central_kernels(dual_lie_tower(t)).ok);
    EXPECT_EQ(t.stages()[0].size(), b1);
    // Stage 2 kills exactly the kernel of the cup product.
    if (t.stage_count() > 1) {
      EXPECT_EQ(t.stages()[1].size(), pairs - rank(cup));
    } else {
      EXPECT_EQ(rank(cup), pairs);
    }
    // Every next stage is the kernel of ρ*, so a stabilized tower injects on H².
    if (t.stabilized()) {
      EXPECT_EQ(rank(tower_h2_map(t, t.stage_count(), data)), tower_h2(t, t.stage_count()).dim());
    }
  }
}

TEST(Property, FreeTowersFollowWitt) {
  for (std::size_t r = 2; r <= 3; ++r) {
    const HirschTower t = build_tower(CupData(r, 0, Matrix(0, binomial(r, 2))), TowerOptions{r == 2 ? 6u : 4u, {}});
    for (std::size_t s = 0; s < t.stage_count(); ++s) EXPECT_EQ(t.stages()[s].size(), oracle::free_lie_dim(r, s + 1));
  }
}

TEST(Property, AveragingProjectorAndInvariantBounds) {
  std::mt19937 rng(112);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const FiniteGroupAction action(LieAlgebra::abelian(n), cyclic_group(random_signed_permutation(rng, n)));
    const auto inv = invariant_dims(action);
    const auto betti = betti_numbers(action.target());
    for (std::size_t k = 0; k <= n; ++k) {
      const Matrix p = averaging_projector(action, k);
      EXPECT_EQ(p * p, p);
      EXPECT_LE(inv[k], betti[k]);
      EXPECT_EQ(rank(p), inv[k]);
    }
    EXPECT_EQ(inv[0], 1u);
    std::vector<oracle::Mat> group;
    for (const auto& g : action.elements()) group.push_back(to_oracle(g));
    EXPECT_EQ(inv, oracle::invariant_betti(to_oracle(action.target().constants()), group));
  }
}

TEST(Property, InducedActionIsAHomomorphism) {
  // On H^k the contragredient action composes covariantly: ρ(gh) = ρ(g)ρ(h).
  std::mt19937 rng(113);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 3;
    const FiniteGroupAction action(LieAlgebra::abelian(n), cyclic_group(random_signed_permutation(rng, n)));
    const auto& el = action.elements();
    for (std::size_t k = 1; k <= n; ++k) {
      const auto rho = induced_action_on_cohomology(action, k);
      for (std::size_t a = 0; a < el.size(); ++a)
        for (std::size_t b = 0; b < el.size(); ++b) {
          const Matrix prod = el[a] * el[b];
          const auto it = std::find(el.begin(), el.end(), prod);
          ASSERT_NE(it, el.end());
          EXPECT_EQ(rho[static_cast<std::size_t>(it - el.begin())], rho[a] * rho[b]);
        }
    }
  }
}

TEST(Property, BettiNumbersIgnoreSignConventions) {
  // Negating every bracket is the opposite convention dξ(x, y) = +ξ([x, y]);
  // flipping basis signs is a change of basis. Neither may change dimensions.
  std::mt19937 rng(116);
  for (int trial = 0; trial < 15; ++trial) {
    const LieAlgebra l = random_nilpotent(rng, 2 + rng() % 2, 1 + rng() % 3);
    const std::size_t n = l.dim();
    std::vector<int> flip(n);
    for (auto& f : flip) f = rng() % 2 ? 1 : -1;
    std::vector<BracketEntry> negated, flipped;
    for (auto e : l.constants().entries()) {
      BracketEntry neg = e;
      for (auto& x : neg.value) x = -x;
      negated.push_back(neg);
      for (std::size_t k = 0; k < n; ++k) e.value[k] *= Rational(flip[e.i] * flip[e.j] * flip[k]);
      flipped.push_back(e);
    }
    const LieAlgebra a(StructureConstants(n, {}, negated)), b(StructureConstants(n, {}, flipped));
    EXPECT_EQ(betti_numbers(a), betti_numbers(l));
    EXPECT_EQ(betti_numbers(b), betti_numbers(l));
    EXPECT_EQ(is_one_formal(a).image_dim, is_one_formal(l).image_dim);
  }
}

TEST(Property, BracketEntryOrderIsIrrelevant) {
  std::mt19937 rng(114);
  for (int trial = 0; trial < 10; ++trial) {
    const LieAlgebra l = random_nilpotent(rng, 3, 2);
    auto entries = l.constants().entries();
    std::shuffle(entries.begin(), entries.end(), rng);
    const LieAlgebra shuffled(StructureConstants(l.dim(), l.labels(), entries));
    EXPECT_EQ(shuffled, l);
    EXPECT_EQ(betti_numbers(shuffled), betti_numbers(l));
  }
}

TEST(Property, RationalTextRoundTrips) {
  std::mt19937 rng(115);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational r = random_rational(rng, 1000, 97);
    EXPECT_EQ(Rational::parse(r.to_string()), r);
  }
}
