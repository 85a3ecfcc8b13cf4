#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nilhodge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or mathematically invalid input (bad Rational text, Jacobi
/// violation, non-automorphism, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A computation would materialize a space larger than the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Upper bound on the dimension of any exterior power that a computation
/// materializes as one side of a matrix. The default admits a 64-generator
/// tower (C(64,2) = 2016) and Lie algebras up to dimension 13.
struct Budget {
  static constexpr std::size_t kDefaultMaxDimension = 2016;

  std::size_t max_dimension = kDefaultMaxDimension;

  void check(std::size_t dimension, std::string_view what) const {
    if (dimension > max_dimension) {
      throw BudgetExceeded("budget exceeded: " + std::string(what) + " has dimension " +
                           std::to_string(dimension) + " > " + std::to_string(max_dimension));
    }
  }
};

/// Outcome of a consistency check. Carries the first failure when `ok` is false.
struct Verdict {
  bool ok = true;
  std::string message;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }

  explicit operator bool() const { return ok; }
};

}  // namespace nilhodge
