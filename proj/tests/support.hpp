#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "nilhodge/central_extension.hpp"
#include "nilhodge/lie_algebra.hpp"
#include "nilhodge/matrix.hpp"
#include "oracles/oracles.hpp"

namespace testing_support {

using namespace nilhodge;

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(NILHODGE_TEST_DATA_DIR) / name;
}

LieAlgebra load_lie(const std::string& name);

inline Vector vec(std::initializer_list<long> xs) { return Vector(xs.begin(), xs.end()); }

oracle::Bracket to_oracle(const StructureConstants& sc);
oracle::Vec to_oracle(std::span<const Rational> v);
oracle::Mat to_oracle(const Matrix& m);

/// Numerators in [-bound, bound], denominators in [1, max_den]; zero with
/// probability `sparsity`.
Rational random_rational(std::mt19937& rng, long bound = 3, long max_den = 3, double sparsity = 0.0);

/// Random nilpotent Lie algebra built by `steps` central extensions of an
/// abelian algebra of dimension `base` by random 2-cocycles.
LieAlgebra random_nilpotent(std::mt19937& rng, std::size_t base, std::size_t steps);

/// Random structure constants, antisymmetric but not necessarily Lie.
StructureConstants random_constants(std::mt19937& rng, std::size_t dim, double sparsity);

ExtensionDatum random_extension(std::mt19937& rng, std::size_t rank, double sparsity = 0.3);

/// Random (1,1) datum of genus g; when `conjugation_stable`, a_ij is symmetric.
ExtensionDatum random_type11(std::mt19937& rng, std::size_t g, bool conjugation_stable,
                             double sparsity = 0.3);

/// Antisymmetric matrix of cl coefficients.
oracle::Mat cl_matrix(const ExtensionDatum& datum);

}  // namespace testing_support
