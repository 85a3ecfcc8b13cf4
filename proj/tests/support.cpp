#include "support.hpp"

#include "cli/formats.hpp"
#include "nilhodge/exterior.hpp"
#include "nilhodge/lie_cohomology.hpp"

namespace testing_support {

LieAlgebra load_lie(const std::string& name) {
  return io::parse_lie(io::read_json_file(data_path(name)));
}

oracle::Bracket to_oracle(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  oracle::Bracket c(n, std::vector<oracle::Vec>(n, oracle::Vec(n, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j][k] = sc.coefficient(i, j, k).value();
  return c;
}

oracle::Vec to_oracle(std::span<const Rational> v) {
  oracle::Vec out;
  for (const auto& x : v) out.push_back(x.value());
  return out;
}

oracle::Mat to_oracle(const Matrix& m) {
  oracle::Mat out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_oracle(m.row(r)));
  return out;
}

Rational random_rational(std::mt19937& rng, long bound, long max_den, double sparsity) {
  if (std::bernoulli_distribution(sparsity)(rng)) return Rational(0);
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, max_den);
  return Rational(num(rng), den(rng));
}

LieAlgebra random_nilpotent(std::mt19937& rng, std::size_t base, std::size_t steps) {
  LieAlgebra current = LieAlgebra::abelian(base);
  for (std::size_t step = 0; step < steps; ++step) {
    const std::size_t n = current.dim();
    // A random 2-cocycle ω gives the central extension [x, y]' = [x, y] + ω(x, y) z.
    const auto cocycles = kernel(ce_differential(current, 2)).basis();
    Vector omega(binomial(n, 2));
    for (const auto& z : cocycles) {
      const Rational c = random_rational(rng, 2, 2, 0.4);
      for (std::size_t t = 0; t < omega.size(); ++t) omega[t] += c * z[t];
    }
    std::vector<BracketEntry> entries;
    const auto pairs = wedge_basis(n, 2);
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      Vector v = current.bracket(pairs[t][0], pairs[t][1]);
      v.push_back(omega[t]);
      bool zero = true;
      for (const auto& x : v) zero = zero && x.is_zero();
      if (!zero) entries.push_back({pairs[t][0], pairs[t][1], std::move(v)});
    }
    current = LieAlgebra(StructureConstants(n + 1, {}, std::move(entries)));
  }
  return current;
}

StructureConstants random_constants(std::mt19937& rng, std::size_t dim, double sparsity) {
  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      Vector v(dim);
      for (auto& x : v) x = random_rational(rng, 2, 2, sparsity);
      entries.push_back({i, j, std::move(v)});
    }
  return StructureConstants(dim, {}, std::move(entries));
}

ExtensionDatum random_extension(std::mt19937& rng, std::size_t rank, double sparsity) {
  Vector cl(binomial(rank, 2));
  for (auto& x : cl) x = random_rational(rng, 3, 3, sparsity);
  return ExtensionDatum(rank, false, std::move(cl));
}

ExtensionDatum random_type11(std::mt19937& rng, std::size_t g, bool conjugation_stable, double sparsity) {
  const std::size_t rank = 2 * g;
  Vector cl(binomial(rank, 2));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      if (conjugation_stable && j < i) {
        cl[wedge_rank(MultiIndex{i, g + j}, rank)] = cl[wedge_rank(MultiIndex{j, g + i}, rank)];
        continue;
      }
      cl[wedge_rank(MultiIndex{i, g + j}, rank)] = random_rational(rng, 3, 2, sparsity);
    }
  return ExtensionDatum(rank, true, std::move(cl));
}

oracle::Mat cl_matrix(const ExtensionDatum& datum) {
  const std::size_t r = datum.rank();
  oracle::Mat m(r, oracle::Vec(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m[i][j] = datum.cl_coefficient(i, j).value();
  return m;
}

}  // namespace testing_support
