#pragma once

#include <array>
#include <optional>

#include "qfact/states.hpp"

namespace qfact {

/// psi = sum_i coefficients[i] |basis_a[i]> (x) |basis_b[i]>, coefficients descending.
struct SchmidtForm {
  std::vector<double> coefficients;
  std::vector<Vector> basis_a;
  std::vector<Vector> basis_b;
  Dims dims;

  Vector reconstruct() const;
};

/// A tensor product structure on C^d given by a unitary u from the model space
/// C^k (x) C^l onto C^d: A = u (M_k (x) I_l) u^dagger, B = u (I_k (x) M_l) u^dagger.
class Factorization {
 public:
  static Factorization create(ComplexMatrix u, Dims dims, const Tolerances& tol = default_tolerances());

  const ComplexMatrix& unitary() const { return u_; }
  Dims dims() const { return dims_; }

  /// Operator / state expressed in the model product basis: u^dagger x u, u^dagger v.
  ComplexMatrix to_model(const ComplexMatrix& op) const;
  Vector to_model(std::span<const cplx> v) const;
  /// Model-space operator carried onto C^d: u x u^dagger.
  ComplexMatrix from_model(const ComplexMatrix& op) const;

 private:
  Factorization(ComplexMatrix u, Dims dims) : u_(std::move(u)), dims_(dims) {}
  ComplexMatrix u_;
  Dims dims_;
};

SchmidtForm schmidt_decompose(std::span<const cplx> amplitudes, Dims dims);
SchmidtForm schmidt_decompose(const PureState& psi);
bool pure_is_factorized(const PureState& psi, double tol = 1e-9);

struct TailoredObservables {
  Factorization factorization;
  std::array<ComplexMatrix, 3> generators_a;  // u (S_i (x) I_l) u^dagger
  std::array<ComplexMatrix, 3> generators_b;  // u (I_k (x) S_i) u^dagger
  Vector model_state;                         // sum_i lambda_i |i>_A |i>_B
};

/// Builds a factorization of C^{k l} in which `psi` has Schmidt coefficients |lambdas|.
/// Throws DimensionError / InvalidStateError on mismatched sizes or norms.
TailoredObservables tailor(std::span<const cplx> psi, std::size_t k, std::size_t l,
                           std::span<const cplx> lambdas, const Tolerances& tol = default_tolerances());
/// Same, with a caller-supplied unitary u that must map the model state onto psi (up to phase).
TailoredObservables tailor_with_unitary(std::span<const cplx> psi, std::size_t k, std::size_t l,
                                        std::span<const cplx> lambdas, const ComplexMatrix& u,
                                        const Tolerances& tol = default_tolerances());
/// The 4x4 orthogonal matrix [[l1,0,0,l2],[0,1,0,0],[0,0,1,0],[-l2,0,0,l1]] (real l1, l2).
ComplexMatrix simple_tailor_unitary(double lambda1, double lambda2);

/// Factorization in which rho is diagonal in the product basis: zeta = u^dagger rho u.
/// Eigenvectors are matched greedily to the product index they overlap most.
Factorization separating_unitary(const DensityMatrix& rho, Dims dims);

struct SubspaceEntanglement {
  ComplexMatrix k;            // full unitary on C^{d*d}
  DensityMatrix rho_k;        // k rho k^dagger
  bool entangled = false;     // partial transpose of the 4x4 block has a negative eigenvalue
  std::vector<double> spectrum;       // eigenvalues of rho, descending
  std::array<std::size_t, 4> v_index; // eigen-indices (0-based) in block order 1, d^2-2, d^2, d^2-1
  std::array<std::size_t, 4> w_index; // product indices of |00>, |01>, |10>, |11>
  ComplexMatrix k_block;      // k restricted to V -> W in those orders
  ComplexMatrix block;        // rho_k restricted to W
  ComplexMatrix block_pt;     // partial transpose of `block` on the second factor
  double min_pt_eigenvalue = 0.0;
  double e1 = 0.0;            // doubly degenerate
  double e2_plus = 0.0;
  double e2_minus = 0.0;
};

/// Rotates the eigenvectors of the largest and the three smallest eigenvalues
/// onto a 2x2 corner of the d x d product basis so that the top eigenvector
/// becomes maximally entangled. Throws DimensionError unless d1 == d2 >= 2.
SubspaceEntanglement subspace_entangle(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

}  // namespace qfact
