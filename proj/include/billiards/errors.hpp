#pragma once

#include <stdexcept>
#include <string>

namespace billiards {

// Input rejected by a precondition or validity rule. The CLI maps this
// to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical breakdown: non-hyperbolic holonomy, cusp escape, degenerate
// arrangement, failed convergence. The CLI maps this to exit code 1.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace billiards
