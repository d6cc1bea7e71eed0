#include "qfact/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qfact {

DensityMatrix DensityMatrix::create(ComplexMatrix m, Dims dims, const Tolerances& tol) {
  if (dims.d1 == 0 || dims.d2 == 0 || m.dim() != dims.total()) {
    throw InvalidStateError("density matrix: dimension " + std::to_string(m.dim()) + " does not match split " +
                            std::to_string(dims.d1) + "x" + std::to_string(dims.d2));
  }
  if (!m.is_finite()) throw InvalidStateError("density matrix: non-finite entries");
  if (!m.is_hermitian(tol.density)) throw InvalidStateError("density matrix: not Hermitian");
  const cplx tr = m.trace();
  if (std::abs(tr - cplx(1.0)) > tol.density) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix: not normalized (trace = " << tr.real() << ")";
    throw InvalidStateError(os.str());
  }
  const double min_eig = eigenvalues(0.5 * (m + m.adjoint()), tol).back();
  if (min_eig < -tol.density) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix: not positive semidefinite (min eigenvalue = " << min_eig << ")";
    throw InvalidStateError(os.str());
  }
  return DensityMatrix(std::move(m), dims);
}

DensityMatrix DensityMatrix::normalize(ComplexMatrix m, Dims dims, const Tolerances& tol) {
  const cplx tr = m.trace();
  if (std::abs(tr) == 0.0) throw InvalidStateError("density matrix: zero trace cannot be normalized");
  m *= 1.0 / tr;
  return create(std::move(m), dims, tol);
}

PureState PureState::create(Vector amplitudes, Dims dims, const Tolerances& tol) {
  if (dims.d1 == 0 || dims.d2 == 0 || amplitudes.size() != dims.total())
    throw InvalidStateError("pure state: length does not match split");
  const double n = norm(amplitudes);
  if (!std::isfinite(n) || std::abs(n - 1.0) > tol.density) {
    std::ostringstream os;
    os.precision(17);
    os << "pure state: not unit norm (norm = " << n << ")";
    throw InvalidStateError(os.str());
  }
  return PureState(std::move(amplitudes), dims);
}

PureState PureState::normalize(Vector amplitudes, Dims dims) {
  return create(normalized(amplitudes), dims);
}

DensityMatrix PureState::density() const {
  return DensityMatrix::create(ComplexMatrix::projector(amps_), dims_);
}

BlochVector BlochVector::create(std::array<double, 3> s, const Tolerances& tol) {
  BlochVector b(s);
  if (!(b.length() <= 1.0 + tol.density)) throw InvalidStateError("Bloch vector: |s| exceeds 1");
  return b;
}

double BlochVector::length() const { return std::sqrt(s_[0] * s_[0] + s_[1] * s_[1] + s_[2] * s_[2]); }

PureState bell_state(BellLabel label) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (label) {
    case BellLabel::PhiPlus: return PureState::create({r, 0.0, 0.0, r}, {2, 2});
    case BellLabel::PhiMinus: return PureState::create({r, 0.0, 0.0, -r}, {2, 2});
    case BellLabel::PsiPlus: return PureState::create({0.0, r, r, 0.0}, {2, 2});
    case BellLabel::PsiMinus: return PureState::create({0.0, r, -r, 0.0}, {2, 2});
  }
  throw std::invalid_argument("bell_state: bad label");
}

BellLabel parse_bell_label(std::string_view name) {
  if (name == "phi+" || name == "Phi+") return BellLabel::PhiPlus;
  if (name == "phi-" || name == "Phi-") return BellLabel::PhiMinus;
  if (name == "psi+" || name == "Psi+") return BellLabel::PsiPlus;
  if (name == "psi-" || name == "Psi-") return BellLabel::PsiMinus;
  throw std::invalid_argument("unknown Bell label: " + std::string(name));
}

std::string to_string(BellLabel label) {
  switch (label) {
    case BellLabel::PhiPlus: return "phi+";
    case BellLabel::PhiMinus: return "phi-";
    case BellLabel::PsiPlus: return "psi+";
    case BellLabel::PsiMinus: return "psi-";
  }
  return "?";
}

DensityMatrix tracial(std::size_t d1, std::size_t d2) {
  const std::size_t d = d1 * d2;
  return DensityMatrix::create(ComplexMatrix::identity(d) * (1.0 / static_cast<double>(d)), {d1, d2});
}

DensityMatrix from_bloch(const BlochVector& b) {
  const auto& s = b.s();
  ComplexMatrix m = pauli::id() + s[0] * pauli::x() + s[1] * pauli::y() + s[2] * pauli::z();
  return DensityMatrix::create(0.5 * m, {2, 1});
}

double purity(const DensityMatrix& rho) { return hs_inner(rho.matrix(), rho.matrix()).real(); }

bool is_pure(const DensityMatrix& rho, double tol) {
  const auto& m = rho.matrix();
  return hs_norm(m * m - m) <= tol;
}

PaperMatrix parse_paper_matrix(std::string_view name) {
  if (name == "rho_U") return PaperMatrix::RhoU;
  if (name == "rho_V") return PaperMatrix::RhoV;
  if (name == "rho_KU") return PaperMatrix::RhoKU;
  if (name == "rho_KV") return PaperMatrix::RhoKV;
  if (name == "K") return PaperMatrix::K;
  throw std::invalid_argument("unknown worked-example matrix: " + std::string(name));
}

ComplexMatrix paper_matrix(PaperMatrix which) {
  switch (which) {
    case PaperMatrix::RhoU:
      return 0.25 * ComplexMatrix{{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}};
    case PaperMatrix::RhoV:
      return 0.25 * ComplexMatrix{{1, 0, 0, 0.5}, {0, 1, 0.5, 0}, {0, 0.5, 1, 0}, {0.5, 0, 0, 1}};
    case PaperMatrix::RhoKU:
      return 0.25 * ComplexMatrix{{2, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 0}};
    case PaperMatrix::RhoKV:
      return 0.125 * ComplexMatrix{{3, 0, 0, 0}, {0, 2, 1, 0}, {0, 1, 2, 0}, {0, 0, 0, 1}};
    case PaperMatrix::K: {
      const double r = std::sqrt(2.0);
      return (1.0 / r) * ComplexMatrix{{1, 0, 0, 1}, {0, r, 0, 0}, {0, 0, r, 0}, {-1, 0, 0, 1}};
    }
  }
  throw std::invalid_argument("paper_matrix: bad name");
}

DensityMatrix paper_state(PaperMatrix which) {
  if (which == PaperMatrix::K) throw std::invalid_argument("K is a unitary, not a state");
  return DensityMatrix::create(paper_matrix(which), {2, 2});
}

std::array<double, 3> correlation_coefficients(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2}) throw DimensionError("correlation_coefficients: two-qubit state required");
  const ComplexMatrix ops[3] = {kron(pauli::x(), pauli::x()), kron(pauli::y(), pauli::y()),
                                kron(pauli::z(), pauli::z())};
  std::array<double, 3> c{};
  for (int i = 0; i < 3; ++i) c[i] = hs_inner(rho.matrix(), ops[i]).real();
  return c;
}

ComplexMatrix bell_diagonal_matrix(const std::array<double, 3>& c) {
  ComplexMatrix m = ComplexMatrix::identity(4) + c[0] * kron(pauli::x(), pauli::x()) +
                    c[1] * kron(pauli::y(), pauli::y()) + c[2] * kron(pauli::z(), pauli::z());
  return 0.25 * m;
}

}  // namespace qfact
