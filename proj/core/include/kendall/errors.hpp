#pragma once

#include <stdexcept>
#include <string>

namespace kendall {

// Thrown when a series or quadrature cannot meet its accuracy contract
// (cancellation beyond the cap, term budget exhausted). Precision loss is
// reported, never masked.
class precision_loss_error : public std::runtime_error {
 public:
  explicit precision_loss_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an iterative solver fails to converge. For the exponent
// inversions this signals an implementation bug (the bracket is guaranteed),
// not a user error.
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace kendall
