#pragma once

#include <string>
#include <vector>

#include "qfact/linalg.hpp"

namespace qfact {

struct GoldenItem {
  std::string name;
  bool pass = false;
  double error = 0.0;  // deviation from the reference value (or 0/1 for yes/no checks)
  double tol = 0.0;
  std::string detail;
};

/// Reproduces the worked two-qubit numbers and the tailored-observable example.
std::vector<GoldenItem> run_golden_suite();

/// Closed-form generators for the 2x2 example with real lambda1, lambda2
/// (S_x, S_y, S_z of the first factor, carried by simple_tailor_unitary).
std::vector<ComplexMatrix> tailored_closed_form(double lambda1, double lambda2);

}  // namespace qfact
