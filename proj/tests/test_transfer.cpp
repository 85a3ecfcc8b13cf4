#include <gtest/gtest.h>

#include "nilhodge/lie_cohomology.hpp"
#include "nilhodge/transfer.hpp"
#include "support.hpp"

using namespace nilhodge;
using testing_support::load_lie;

namespace {

Matrix diag(std::initializer_list<long> xs) {
  Matrix m(xs.size(), xs.size());
  std::size_t i = 0;
  for (long x : xs) m(i, i) = x, ++i;
  return m;
}

// x → y, y → -x, z → z on h3.
Matrix quarter_turn() { return Matrix{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}; }

std::vector<Matrix> cyclic(const Matrix& g) {
  std::vector<Matrix> out{Matrix::identity(g.rows())};
  for (Matrix p = g; !(p == out.front()); p = p * g) out.push_back(p);
  return out;
}

}  // namespace

TEST(Transfer, ValidationMessages) {
  const LieAlgebra h3 = load_lie("h3.json");
  EXPECT_EQ(validate_action(h3, {}).message, "group has no elements");
  EXPECT_NE(validate_action(h3, {Matrix::identity(2)}).message.find("is not 3 x 3"), std::string::npos);
  EXPECT_EQ(validate_action(h3, {Matrix::identity(3), diag({1, 1, 0})}).message, "not invertible (element 1)");
  EXPECT_EQ(validate_action(h3, {Matrix::identity(3), diag({-1, 1, 1})}).message,
            "not an automorphism (element 1, pair 0,1)");
  EXPECT_EQ(validate_action(h3, {diag({-1, -1, 1})}).message, "identity missing");
  EXPECT_EQ(validate_action(h3, {Matrix::identity(3), Matrix::identity(3)}).message, "duplicate element 1");
  EXPECT_EQ(validate_action(h3, {Matrix::identity(3), quarter_turn()}).message, "not closed under product");
  EXPECT_THROW(FiniteGroupAction(h3, {diag({-1, -1, 1})}), InvalidInput);
}

TEST(Transfer, SignActionOnHeisenberg) {
  const FiniteGroupAction action(load_lie("h3.json"), {Matrix::identity(3), diag({-1, -1, 1})});
  EXPECT_EQ(invariant_dims(action), (std::vector<std::size_t>{1, 0, 0, 1}));
  const auto induced = induced_action_on_cohomology(action, 1);
  ASSERT_EQ(induced.size(), 2u);
  EXPECT_EQ(induced[1], diag({-1, -1}));
}

TEST(Transfer, TrivialGroupReproducesBetti) {
  for (const char* name : {"h3.json", "complex_heisenberg.json", "filiform4.json"}) {
    const LieAlgebra l = load_lie(name);
    const FiniteGroupAction action(l, {Matrix::identity(l.dim())});
    EXPECT_EQ(invariant_dims(action), betti_numbers(l)) << name;
  }
}

TEST(Transfer, QuarterTurnOnHeisenberg) {
  const FiniteGroupAction action(load_lie("h3.json"), cyclic(quarter_turn()));
  EXPECT_EQ(action.order(), 4u);
  EXPECT_EQ(invariant_dims(action), (std::vector<std::size_t>{1, 0, 0, 1}));
  for (std::size_t k = 0; k <= 3; ++k) {
    const Matrix p = averaging_projector(action, k);
    EXPECT_EQ(p * p, p);
  }
}

TEST(Transfer, OrderOfElementsDoesNotMatter) {
  auto elements = cyclic(quarter_turn());
  const FiniteGroupAction forward(load_lie("h3.json"), elements);
  std::reverse(elements.begin() + 1, elements.end());
  std::swap(elements.front(), elements.back());
  const FiniteGroupAction shuffled(load_lie("h3.json"), elements);
  for (std::size_t k = 0; k <= 3; ++k)
    EXPECT_EQ(averaging_projector(forward, k), averaging_projector(shuffled, k));
}
