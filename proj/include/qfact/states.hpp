#pragma once

#include <array>
#include <string>
#include <string_view>

#include "qfact/linalg.hpp"

namespace qfact {

/// Trace-one, Hermitian, positive semidefinite matrix with a bipartite split.
/// Construction validates all three properties and never renormalizes.
class DensityMatrix {
 public:
  /// Throws InvalidStateError naming the first violated property.
  static DensityMatrix create(ComplexMatrix m, Dims dims, const Tolerances& tol = default_tolerances());
  /// Divides by the trace, then validates.
  static DensityMatrix normalize(ComplexMatrix m, Dims dims, const Tolerances& tol = default_tolerances());

  const ComplexMatrix& matrix() const { return m_; }
  Dims dims() const { return dims_; }
  std::size_t dim() const { return m_.dim(); }

 private:
  DensityMatrix(ComplexMatrix m, Dims dims) : m_(std::move(m)), dims_(dims) {}
  ComplexMatrix m_;
  Dims dims_;
};

/// Unit-norm state vector with a bipartite split.
class PureState {
 public:
  static PureState create(Vector amplitudes, Dims dims, const Tolerances& tol = default_tolerances());
  static PureState normalize(Vector amplitudes, Dims dims);

  const Vector& amplitudes() const { return amps_; }
  Dims dims() const { return dims_; }
  std::size_t dim() const { return amps_.size(); }
  DensityMatrix density() const;

 private:
  PureState(Vector a, Dims dims) : amps_(std::move(a)), dims_(dims) {}
  Vector amps_;
  Dims dims_;
};

class BlochVector {
 public:
  static BlochVector create(std::array<double, 3> s, const Tolerances& tol = default_tolerances());
  const std::array<double, 3>& s() const { return s_; }
  double length() const;

 private:
  explicit BlochVector(std::array<double, 3> s) : s_(s) {}
  std::array<double, 3> s_;
};

enum class BellLabel { PhiPlus = 0, PhiMinus = 1, PsiPlus = 2, PsiMinus = 3 };

PureState bell_state(BellLabel label);
BellLabel parse_bell_label(std::string_view name);  // phi+, phi-, psi+, psi-
std::string to_string(BellLabel label);

DensityMatrix tracial(std::size_t d1, std::size_t d2);
DensityMatrix from_bloch(const BlochVector& s);
bool is_pure(const DensityMatrix& rho, double tol = 1e-9);
double purity(const DensityMatrix& rho);

/// Worked two-qubit matrices: rho_U, rho_V, rho_KU, rho_KV and the unitary K.
enum class PaperMatrix { RhoU, RhoV, RhoKU, RhoKV, K };
PaperMatrix parse_paper_matrix(std::string_view name);
ComplexMatrix paper_matrix(PaperMatrix which);
/// Throws std::invalid_argument for K, which is not a state.
DensityMatrix paper_state(PaperMatrix which);

/// Correlations c_i = Tr(rho sigma_i (x) sigma_i) of a two-qubit state.
std::array<double, 3> correlation_coefficients(const DensityMatrix& rho);
/// (1/4)(I + sum_i c_i sigma_i (x) sigma_i); no positivity check.
ComplexMatrix bell_diagonal_matrix(const std::array<double, 3>& c);

}  // namespace qfact
