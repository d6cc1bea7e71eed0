#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qfact {

/// Numerical tolerances used across the library. Every threshold lives here so
/// a run can be reproduced (and overridden from the command line) by name.
struct Tolerances {
  double eig_offdiag = 1e-12;     // Jacobi stop: off-diagonal Frobenius mass
  int eig_max_sweeps = 100;
  double degenerate_gap = 1e-9;   // eigenvalue cluster width
  double hermitian = 1e-10;       // input check for hermitian_eig
  double density = 1e-9;          // trace / hermiticity / PSD slack for states
  double ppt = 1e-9;              // PT minimum-eigenvalue slack
  double unitary = 1e-9;
  double gram_schmidt = 1e-9;     // residual below which a candidate is dropped
  double rank = 1e-8;             // algebra span rank cut
  double schmidt = 1e-9;          // Schmidt coefficient comparisons
  double kz_slack = 1e-12;
  double geometry_slack = 1e-12;
  double lmo_change = 1e-10;      // alternating product-state search stop
  int lmo_restarts = 20;
  double fw_gap = 1e-9;           // nearest-separable duality gap stop (conditional gradient)
  int fw_max_iter = 500;
  double proj_change = 1e-15;     // alternating-projection stop (2x2, 2x3)
  int proj_max_iter = 200000;

  /// Sets a field by its name (as listed by names()). Throws std::invalid_argument
  /// on an unknown name.
  void set(std::string_view name, double value);
  static std::vector<std::string> names();
};

const Tolerances& default_tolerances();

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qfact
