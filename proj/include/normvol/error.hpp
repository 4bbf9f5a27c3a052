#pragma once

#include <stdexcept>
#include <string>

namespace normvol {

/// Invalid argument or malformed input (maps to CLI exit code 2).
class InputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Lower-dimensional or unbounded geometry, origin not interior.
class DegeneracyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Non-finite values or an iterative method that did not converge (exit code 3).
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string& what, double residual = 0.0)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const { return residual_; }

  private:
    double residual_;
};

}  // namespace normvol
