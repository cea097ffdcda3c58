#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace levyhedge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: length or measure mismatch, out-of-range parameter.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A domain type's invariant does not hold (e.g. a jump volatility <= -1).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Pathwise integration produced a non-finite (or inadmissible) state.
class IntegrationError : public Error {
 public:
  IntegrationError(std::size_t step, const std::string& what)
      : Error("integration failed at step " + std::to_string(step) + ": " + what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// Quotient rule with a denominator jump factor 1 + gamma equal to zero.
class SingularDenominatorError : public Error {
 public:
  explicit SingularDenominatorError(std::size_t atom)
      : Error("singular denominator: 1 + jump_vol is zero at atom " + std::to_string(atom)),
        atom_(atom) {}

  std::size_t atom() const noexcept { return atom_; }

 private:
  std::size_t atom_;
};

}  // namespace levyhedge
