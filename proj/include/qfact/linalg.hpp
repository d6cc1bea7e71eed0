#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "qfact/config.hpp"

namespace qfact {

using cplx = std::complex<double>;
using Vector = std::vector<cplx>;

/// Bipartite dimension split (d1, d2); composite index i = j * d2 + k.
struct Dims {
  std::size_t d1 = 1;
  std::size_t d2 = 1;
  std::size_t total() const { return d1 * d2; }
  friend bool operator==(const Dims&, const Dims&) = default;
};

enum class Subsystem { A, B };

/// Dense square complex matrix stored row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
  ComplexMatrix(std::size_t dim, Vector row_major);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  static ComplexMatrix outer(std::span<const cplx> ket, std::span<const cplx> bra);
  static ComplexMatrix projector(std::span<const cplx> ket) { return outer(ket, ket); }

  std::size_t dim() const { return dim_; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  std::span<const cplx> data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;
  cplx trace() const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const cplx> v);

  bool is_finite() const;
  bool is_hermitian(double tol) const;
  double max_abs() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= cplx(s); }
  friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= cplx(s); }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend Vector operator*(const ComplexMatrix& a, std::span<const cplx> v);

 private:
  std::size_t dim_ = 0;
  Vector data_;
};

/// Maximum absolute entrywise difference.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Vector helpers.
cplx inner(std::span<const cplx> a, std::span<const cplx> b);  // <a|b>
double norm(std::span<const cplx> v);
Vector normalized(std::span<const cplx> v);
Vector kron(std::span<const cplx> a, std::span<const cplx> b);
Vector basis_vector(std::size_t dim, std::size_t index);
/// Distance between two states modulo a global phase (phase aligned on the
/// largest-magnitude amplitude of `a`).
double phase_distance(std::span<const cplx> a, std::span<const cplx> b);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
ComplexMatrix id();
}  // namespace pauli

/// Spin-(dim-1)/2 generators {S_x, S_y, S_z} on C^dim, basis ordered m = s, s-1, ..., -s.
std::vector<ComplexMatrix> spin_generators(std::size_t dim);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix partial_trace(const ComplexMatrix& m, Dims dims, Subsystem keep);
ComplexMatrix partial_transpose(const ComplexMatrix& m, Dims dims, Subsystem which);

struct HermitianEig {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // columns, matching order
};

/// Cyclic complex Jacobi. Throws DimensionError if `m` is not Hermitian within
/// tol.hermitian, ConvergenceError after tol.eig_max_sweeps sweeps.
HermitianEig hermitian_eig(const ComplexMatrix& m, const Tolerances& tol = default_tolerances());
std::vector<double> eigenvalues(const ComplexMatrix& m, const Tolerances& tol = default_tolerances());

struct Svd {
  std::vector<double> singular_values;  // descending
  std::vector<Vector> left;             // min(rows, cols) orthonormal vectors, length rows
  std::vector<Vector> right;            // min(rows, cols) orthonormal vectors, length cols
};

/// One-sided Jacobi SVD of a small rows x cols row-major matrix: a = sum_i s_i left_i right_i^dagger.
Svd svd(std::span<const cplx> row_major, std::size_t rows, std::size_t cols);

cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);  // Tr(a^dagger b)
double hs_norm(const ComplexMatrix& a);
double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Orthonormal basis of C^dim whose leading vectors span the same flags as the
/// seeds, completed from canonical basis vectors in index order.
/// Throws std::invalid_argument on linearly dependent seeds.
std::vector<Vector> gram_schmidt_complete(const std::vector<Vector>& seeds, std::size_t dim,
                                          const Tolerances& tol = default_tolerances());

/// Columns of the matrix are the given vectors.
ComplexMatrix from_columns(const std::vector<Vector>& columns);

bool is_unitary(const ComplexMatrix& m, double tol);

/// Dimension of the unital associative algebra generated by `generators`.
std::size_t algebra_span_dim(const std::vector<ComplexMatrix>& generators,
                             const Tolerances& tol = default_tolerances());

}  // namespace qfact
