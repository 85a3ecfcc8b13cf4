#include "nilhodge/transfer.hpp"

#include <algorithm>
#include <string>

#include "nilhodge/exterior.hpp"
#include "nilhodge/lie_cohomology.hpp"
#include "nilhodge/subspace.hpp"

namespace nilhodge {

Verdict validate_action(const LieAlgebra& target, const std::vector<Matrix>& elements) {
  const std::size_t n = target.dim();
  if (elements.empty()) return Verdict::fail("group has no elements");
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const Matrix& phi = elements[e];
    const std::string tag = "element " + std::to_string(e);
    if (phi.rows() != n || phi.cols() != n) return Verdict::fail(tag + " is not " + std::to_string(n) + " x " + std::to_string(n));
    if (determinant(phi).is_zero()) return Verdict::fail("not invertible (" + tag + ")");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const Vector lhs = phi.apply(target.bracket(i, j));
        const Vector rhs = target.bracket(phi.column(i), phi.column(j));
        if (lhs != rhs) {
          return Verdict::fail("not an automorphism (" + tag + ", pair " + std::to_string(i) + "," +
                               std::to_string(j) + ")");
        }
      }
    }
  }
  const Matrix id = Matrix::identity(n);
  if (std::find(elements.begin(), elements.end(), id) == elements.end())
    return Verdict::fail("identity missing");
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = a + 1; b < elements.size(); ++b)
      if (elements[a] == elements[b]) return Verdict::fail("duplicate element " + std::to_string(b));
  for (const auto& a : elements) {
    for (const auto& b : elements) {
      if (std::find(elements.begin(), elements.end(), a * b) == elements.end())
        return Verdict::fail("not closed under product");
    }
  }
  return Verdict::pass();
}

FiniteGroupAction::FiniteGroupAction(LieAlgebra target, std::vector<Matrix> elements)
    : target_(std::move(target)), elements_(std::move(elements)) {
  const Verdict v = validate_action(target_, elements_);
  if (!v) throw InvalidInput(v.message);
}

std::vector<Matrix> induced_action_on_cohomology(const FiniteGroupAction& action, std::size_t k,
                                                 const Budget& budget) {
  const CohomologyBasis h = cohomology_basis(action.target(), k, budget);
  std::vector<Matrix> out;
  out.reserve(action.order());
  for (const auto& phi : action.elements()) {
    const Matrix on_forms = exterior_power(inverse(phi).transpose(), k);
    Matrix m(h.dim(), h.dim());
    for (std::size_t c = 0; c < h.dim(); ++c) {
      // Automorphisms commute with d, so the image is again a cocycle.
      const Vector cls = h.class_of(on_forms.apply(h.representatives()[c]));
      for (std::size_t r = 0; r < h.dim(); ++r) m(r, c) = cls[r];
    }
    out.push_back(std::move(m));
  }
  return out;
}

Matrix averaging_projector(const FiniteGroupAction& action, std::size_t k, const Budget& budget) {
  const auto induced = induced_action_on_cohomology(action, k, budget);
  Matrix sum(induced.front().rows(), induced.front().cols());
  for (const auto& m : induced) sum = sum + m;
  return Rational(1, static_cast<long>(action.order())) * sum;
}

std::vector<std::size_t> invariant_dims(const FiniteGroupAction& action, const Budget& budget) {
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k <= action.target().dim(); ++k)
    dims.push_back(rank(averaging_projector(action, k, budget)));
  return dims;
}

}  // namespace nilhodge
