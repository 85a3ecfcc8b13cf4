#include "nilhodge/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "nilhodge/error.hpp"
#include "nilhodge/lie_cohomology.hpp"

namespace nilhodge {
namespace {

std::string pair_text(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::vector<std::string> default_labels(std::size_t dim) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

}  // namespace

StructureConstants::StructureConstants(std::size_t dim)
    : dim_(dim), labels_(default_labels(dim)), table_(dim * dim * dim) {}

StructureConstants::StructureConstants(std::size_t dim, std::vector<std::string> labels,
                                       std::vector<BracketEntry> brackets)
    : dim_(dim), labels_(std::move(labels)), table_(dim * dim * dim) {
  if (labels_.empty()) labels_ = default_labels(dim);
  if (labels_.size() != dim) {
    throw InvalidInput("expected " + std::to_string(dim) + " labels, got " +
                       std::to_string(labels_.size()));
  }
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != dim)
    throw InvalidInput("duplicate label");

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& b : brackets) seen.insert({b.i, b.j});
  std::set<std::pair<std::size_t, std::size_t>> stored;
  for (auto& b : brackets) {
    if (b.i >= dim || b.j >= dim) throw InvalidInput("bracket index out of range " + pair_text(b.i, b.j));
    if (b.i == b.j) throw InvalidInput("bracket " + pair_text(b.i, b.j) + " pairs a generator with itself");
    if (b.i > b.j) {
      if (seen.count({b.j, b.i}) != 0)
        throw InvalidInput("ambiguous bracket: both " + pair_text(b.j, b.i) + " and " +
                           pair_text(b.i, b.j) + " given");
      throw InvalidInput("bracket " + pair_text(b.i, b.j) + " must be given with i < j");
    }
    if (!stored.insert({b.i, b.j}).second)
      throw InvalidInput("duplicate bracket " + pair_text(b.i, b.j));
    if (b.value.size() != dim)
      throw InvalidInput("bracket " + pair_text(b.i, b.j) + " value has the wrong length");
    for (std::size_t k = 0; k < dim; ++k) {
      table_[(b.i * dim + b.j) * dim + k] = b.value[k];
      table_[(b.j * dim + b.i) * dim + k] = -b.value[k];
    }
  }
}

Vector StructureConstants::bracket(std::size_t i, std::size_t j) const {
  const auto first = table_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

Vector StructureConstants::bracket(std::span<const Rational> u, std::span<const Rational> v) const {
  if (u.size() != dim_ || v.size() != dim_) throw InvalidInput("bracket operand has the wrong length");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero() || i == j) continue;
      const Rational uv = u[i] * v[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& c = coefficient(i, j, k);
        if (!c.is_zero()) out[k] += uv * c;
      }
    }
  }
  return out;
}

std::vector<BracketEntry> StructureConstants::entries() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      Vector v = bracket(i, j);
      if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); }))
        out.push_back({i, j, std::move(v)});
    }
  }
  return out;
}

LieAlgebra::LieAlgebra(StructureConstants constants) : constants_(std::move(constants)) {
  const Verdict v = validate(constants_);
  if (!v) throw InvalidInput(v.message);
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra(StructureConstants(dim)); }

bool LieAlgebra::is_abelian() const { return constants_.entries().empty(); }

}  // namespace nilhodge
