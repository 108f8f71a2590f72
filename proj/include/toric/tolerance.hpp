#pragma once

#include <stdexcept>

namespace toric {

// Thresholds for the three kinds of numeric decisions made by the library.
struct Tolerance {
  double eps_geom = 1e-9;   // rank / face / membership tests
  double eps_opt = 1e-10;   // optimizer convergence
  double eps_limit = 1e-6;  // limit-detection thresholds

  void validate() const {
    if (eps_geom <= 0.0 || eps_opt <= 0.0 || eps_limit <= 0.0)
      throw std::invalid_argument("Tolerance: all thresholds must be positive");
    if (eps_opt > eps_geom)
      throw std::invalid_argument("Tolerance: eps_opt must not exceed eps_geom");
  }
};

}  // namespace toric
