#include <gtest/gtest.h>

#include "cli/formats.hpp"
#include "nilhodge/central_extension.hpp"
#include "nilhodge/exterior.hpp"
#include "nilhodge/lie_cohomology.hpp"
#include "support.hpp"

using namespace nilhodge;
using testing_support::data_path;

namespace {

ExtensionDatum load_ext(const std::string& name) {
  return io::parse_extension(io::read_json_file(data_path(name)));
}

std::map<std::pair<int, int>, std::size_t> hodge(std::initializer_list<std::pair<std::pair<int, int>, std::size_t>> xs) {
  return {xs.begin(), xs.end()};
}

}  // namespace

TEST(ExtensionDatum, ShapeIsChecked) {
  EXPECT_THROW(ExtensionDatum(3, false, Vector(2)), InvalidInput);
  EXPECT_THROW(ExtensionDatum(3, true, Vector(3)), InvalidInput);
  const ExtensionDatum d = load_ext("heisenberg_ext.json");
  EXPECT_EQ(d.cl_coefficient(0, 1), Rational(1));
  EXPECT_EQ(d.cl_coefficient(1, 0), Rational(-1));
  EXPECT_EQ(d.cl_coefficient(1, 1), Rational(0));
}

TEST(Gysin, HeisenbergExtension) {
  const ExtensionDatum d = load_ext("heisenberg_ext.json");
  EXPECT_EQ(gysin_dims(d), (std::vector<std::size_t>{1, 2, 2, 1}));
  const SurjectivityReport s = h2ab_to_h2_surjectivity(d);
  EXPECT_EQ(s.h2_abelian_dim, 1u);
  EXPECT_EQ(s.h2_dim, 2u);
  EXPECT_FALSE(s.surjective);
  EXPECT_TRUE(nomizu_crosscheck(d).ok);
  EXPECT_TRUE(carlson_toledo_check(d).nonzero);
  EXPECT_EQ(betti_numbers(associated_lie_algebra(d)), betti_numbers(testing_support::load_lie("h3.json")));
}

TEST(Gysin, TrivialExtensionIsATorus) {
  const ExtensionDatum d = load_ext("zero_ext.json");
  EXPECT_EQ(gysin_dims(d), (std::vector<std::size_t>{1, 3, 3, 1}));
  const SurjectivityReport s = h2ab_to_h2_surjectivity(d);
  EXPECT_EQ(s.h2_abelian_dim, 1u);
  EXPECT_EQ(s.h2_dim, 3u);
  EXPECT_FALSE(s.surjective);
  EXPECT_FALSE(purity_check_h2(d));
}

TEST(Gysin, CupWithClassShapes) {
  const ExtensionDatum d = load_ext("nondegenerate_11_ext.json");
  EXPECT_EQ(cup_with_class(d, 0).rows(), 6u);
  EXPECT_EQ(cup_with_class(d, 0).cols(), 1u);
  EXPECT_EQ(cup_with_class(d, 2).rows(), 1u);
  EXPECT_EQ(cup_with_class(d, 3).rows(), 0u);
  EXPECT_EQ(cup_with_class(d, -1).cols(), 0u);
}

TEST(Hodge, NondegenerateTypeOneOneIsPure) {
  const ExtensionDatum d = load_ext("nondegenerate_11_ext.json");
  EXPECT_TRUE(d.is_type_11());
  EXPECT_TRUE(d.is_conjugation_stable());
  EXPECT_EQ(gysin_dims(d), (std::vector<std::size_t>{1, 4, 5, 5, 4, 1}));
  const WeightGradedHodge h2 = gysin_mhs(d, 2);
  ASSERT_EQ(h2.pieces.size(), 1u);
  EXPECT_EQ(h2.pieces[0].weight, 2);
  EXPECT_EQ(h2.pieces[0].dim, 5u);
  EXPECT_EQ(h2.pieces[0].hodge_numbers, hodge({{{2, 0}, 1}, {{1, 1}, 3}, {{0, 2}, 1}}));
  EXPECT_TRUE(h2.is_pure_of_weight(2));
  EXPECT_TRUE(purity_check_h2(d));
  const SurjectivityReport s = h2ab_to_h2_surjectivity(d);
  EXPECT_EQ(s.h2_abelian_dim, 6u);
  EXPECT_EQ(s.h2_dim, 5u);
  EXPECT_TRUE(s.surjective);
}

TEST(Hodge, DegenerateClassMixesWeights) {
  const ExtensionDatum d = load_ext("kodaira_thurston_ext.json");
  const WeightGradedHodge h2 = gysin_mhs(d, 2);
  ASSERT_EQ(h2.pieces.size(), 1u);
  EXPECT_EQ(h2.pieces[0].weight, 3);
  EXPECT_EQ(h2.pieces[0].hodge_numbers, hodge({{{3, 0}, 0}, {{2, 1}, 1}, {{1, 2}, 1}, {{0, 3}, 0}}));
  EXPECT_FALSE(purity_check_h2(d));
  EXPECT_EQ(gysin_mhs(load_ext("zero_ext.json"), 2).pieces.size(), 2u);
}

TEST(Hodge, RejectsUntypedOrWrongType) {
  EXPECT_THROW(gysin_mhs(load_ext("heisenberg_ext.json"), 2), InvalidInput);
  const ExtensionDatum wrong = load_ext("type20_ext.json");
  EXPECT_FALSE(wrong.is_type_11());
  try {
    gysin_mhs(wrong, 2);
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_STREQ(e.what(), "cl not of type (1,1)");
  }
}

TEST(Hodge, ConjugationStability) {
  // i(z1 ∧ z̄2 + z2 ∧ z̄1) is stable, z1 ∧ z̄2 alone is not.
  Vector sym(binomial(4, 2)), skew(binomial(4, 2));
  sym[wedge_rank(MultiIndex{0, 3}, 4)] = 1;
  sym[wedge_rank(MultiIndex{1, 2}, 4)] = 1;
  skew[wedge_rank(MultiIndex{0, 3}, 4)] = 1;
  EXPECT_TRUE(ExtensionDatum(4, true, sym).is_conjugation_stable());
  EXPECT_FALSE(ExtensionDatum(4, true, skew).is_conjugation_stable());
  EXPECT_TRUE(ExtensionDatum(4, true, skew).is_type_11());
}

TEST(CarlsonToledo, NeedsPositiveRank) {
  EXPECT_THROW(carlson_toledo_check(ExtensionDatum(0, false, Vector{})), InvalidInput);
  EXPECT_EQ(gysin_dims(ExtensionDatum(0, false, Vector{})), (std::vector<std::size_t>{1, 1}));
}
