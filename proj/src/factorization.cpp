#include "qfact/factorization.hpp"

#include <algorithm>
#include <cmath>

namespace qfact {

Vector SchmidtForm::reconstruct() const {
  Vector out(dims.total());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const Vector term = kron(basis_a[i], basis_b[i]);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += coefficients[i] * term[j];
  }
  return out;
}

Factorization Factorization::create(ComplexMatrix u, Dims dims, const Tolerances& tol) {
  if (dims.d1 == 0 || dims.d2 == 0 || u.dim() != dims.total())
    throw DimensionError("factorization: unitary dimension does not match split");
  if (!is_unitary(u, tol.unitary)) throw std::invalid_argument("factorization: matrix is not unitary");
  return Factorization(std::move(u), dims);
}

ComplexMatrix Factorization::to_model(const ComplexMatrix& op) const { return u_.adjoint() * op * u_; }

Vector Factorization::to_model(std::span<const cplx> v) const { return u_.adjoint() * v; }

ComplexMatrix Factorization::from_model(const ComplexMatrix& op) const { return u_ * op * u_.adjoint(); }

SchmidtForm schmidt_decompose(std::span<const cplx> amplitudes, Dims dims) {
  if (amplitudes.size() != dims.total()) throw DimensionError("schmidt_decompose: length does not match split");
  // Amplitudes reshaped row-major are the d1 x d2 coefficient matrix.
  Svd s = svd(amplitudes, dims.d1, dims.d2);
  SchmidtForm out;
  out.dims = dims;
  out.coefficients = std::move(s.singular_values);
  out.basis_a = std::move(s.left);
  for (auto& v : s.right) {
    for (auto& x : v) x = std::conj(x);
    out.basis_b.push_back(std::move(v));
  }
  return out;
}

SchmidtForm schmidt_decompose(const PureState& psi) { return schmidt_decompose(psi.amplitudes(), psi.dims()); }

bool pure_is_factorized(const PureState& psi, double tol) {
  const auto form = schmidt_decompose(psi);
  return form.coefficients.size() < 2 || form.coefficients[1] <= tol;
}

namespace {

Vector model_state(std::size_t k, std::size_t l, std::span<const cplx> lambdas) {
  Vector phi(k * l);
  for (std::size_t i = 0; i < lambdas.size(); ++i) phi[i * l + i] = lambdas[i];
  return phi;
}

void check_tailor_inputs(std::span<const cplx> psi, std::size_t k, std::size_t l, std::span<const cplx> lambdas,
                         const Tolerances& tol) {
  if (k == 0 || l == 0 || psi.size() != k * l)
    throw DimensionError("tailor: state length " + std::to_string(psi.size()) + " is not k*l = " +
                         std::to_string(k * l));
  if (lambdas.size() != std::min(k, l))
    throw DimensionError("tailor: need min(k, l) = " + std::to_string(std::min(k, l)) + " coefficients");
  if (std::abs(norm(psi) - 1.0) > tol.density) throw InvalidStateError("tailor: state is not normalized");
  if (std::abs(norm(lambdas) - 1.0) > tol.density)
    throw InvalidStateError("tailor: sum of |lambda_i|^2 must equal 1");
}

TailoredObservables build_generators(Factorization f, std::size_t k, std::size_t l, Vector phi) {
  const auto sa = spin_generators(k);
  const auto sb = spin_generators(l);
  const auto ik = ComplexMatrix::identity(k);
  const auto il = ComplexMatrix::identity(l);
  TailoredObservables out{std::move(f), {}, {}, std::move(phi)};
  for (int i = 0; i < 3; ++i) {
    out.generators_a[i] = out.factorization.from_model(kron(sa[i], il));
    out.generators_b[i] = out.factorization.from_model(kron(ik, sb[i]));
  }
  return out;
}

}  // namespace

TailoredObservables tailor(std::span<const cplx> psi, std::size_t k, std::size_t l, std::span<const cplx> lambdas,
                           const Tolerances& tol) {
  check_tailor_inputs(psi, k, l, lambdas, tol);
  const std::size_t d = k * l;
  Vector phi = model_state(k, l, lambdas);
  // u maps the completed basis {phi, ...} of the model space onto {psi, ...}.
  const ComplexMatrix psi_basis = from_columns(gram_schmidt_complete({Vector(psi.begin(), psi.end())}, d, tol));
  const ComplexMatrix phi_basis = from_columns(gram_schmidt_complete({phi}, d, tol));
  auto f = Factorization::create(psi_basis * phi_basis.adjoint(), {k, l}, tol);
  return build_generators(std::move(f), k, l, std::move(phi));
}

TailoredObservables tailor_with_unitary(std::span<const cplx> psi, std::size_t k, std::size_t l,
                                        std::span<const cplx> lambdas, const ComplexMatrix& u,
                                        const Tolerances& tol) {
  check_tailor_inputs(psi, k, l, lambdas, tol);
  Vector phi = model_state(k, l, lambdas);
  auto f = Factorization::create(u, {k, l}, tol);
  if (phase_distance(psi, u * phi) > tol.unitary)
    throw std::invalid_argument("tailor: supplied unitary does not map the model state onto the input state");
  return build_generators(std::move(f), k, l, std::move(phi));
}

ComplexMatrix simple_tailor_unitary(double lambda1, double lambda2) {
  return ComplexMatrix{{lambda1, 0, 0, lambda2}, {0, 1, 0, 0}, {0, 0, 1, 0}, {-lambda2, 0, 0, lambda1}};
}

Factorization separating_unitary(const DensityMatrix& rho, Dims dims) {
  if (dims.total() != rho.dim()) throw DimensionError("separating_unitary: split does not match state");
  const auto eig = hermitian_eig(rho.matrix());
  const std::size_t n = rho.dim();
  std::vector<bool> vec_used(n, false), idx_used(n, false);
  ComplexMatrix u(n);
  for (std::size_t step = 0; step < n; ++step) {
    double best = -1.0;
    std::size_t bv = 0, bi = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (vec_used[v]) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (idx_used[i]) continue;
        const double w = std::norm(eig.eigenvectors(i, v));
        if (w > best) {
          best = w;
          bv = v;
          bi = i;
        }
      }
    }
    vec_used[bv] = idx_used[bi] = true;
    Vector col = eig.eigenvectors.column(bv);
    const cplx a = col[bi];
    if (std::abs(a) > 0.0) {
      const cplx phase = std::conj(a) / std::abs(a);
      for (auto& x : col) x *= phase;
    }
    u.set_column(bi, col);
  }
  return Factorization::create(std::move(u), dims);
}

SubspaceEntanglement subspace_entangle(const DensityMatrix& rho, const Tolerances& tol) {
  const Dims dims = rho.dims();
  if (dims.d1 != dims.d2 || dims.d1 < 2) throw DimensionError("subspace_entangle: requires a d x d split, d >= 2");
  const std::size_t d = dims.d1;
  const std::size_t n = d * d;
  const auto eig = hermitian_eig(rho.matrix(), tol);

  const std::array<std::size_t, 4> v_index{0, n - 3, n - 1, n - 2};
  const std::array<std::size_t, 4> w_index{0, 1, d, d + 1};
  const double r = 1.0 / std::sqrt(2.0);
  const ComplexMatrix k_block{{r, 0, 0, r}, {0, 1, 0, 0}, {0, 0, 1, 0}, {r, 0, 0, -r}};

  // k = sum over eigenvectors of |target><v|; eigenvectors outside V go to the
  // remaining product basis vectors in index order.
  ComplexMatrix targets(n);  // column e = image of eigenvector e
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) targets(w_index[b], v_index[a]) = k_block(b, a);
  std::size_t next = 0;
  auto in_w = [&](std::size_t i) { return std::find(w_index.begin(), w_index.end(), i) != w_index.end(); };
  for (std::size_t e = 1; e + 3 < n; ++e) {
    while (in_w(next)) ++next;
    targets(next++, e) = 1.0;
  }
  ComplexMatrix k = targets * eig.eigenvectors.adjoint();
  ComplexMatrix rk = k * rho.matrix() * k.adjoint();

  ComplexMatrix block(4);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) block(a, b) = rk(w_index[a], w_index[b]);
  ComplexMatrix block_pt = partial_transpose(block, {2, 2}, Subsystem::B);
  // Restore exact hermiticity lost to rounding before the eigensolve.
  block_pt = 0.5 * (block_pt + block_pt.adjoint());
  const double min_pt = eigenvalues(block_pt, tol).back();

  const auto& s = eig.eigenvalues;
  const double r1 = s[0], rm2 = s[n - 3], rm1 = s[n - 2], rm0 = s[n - 1];
  const double mean = 0.5 * (rm2 + rm0);
  const double root = std::sqrt(std::max(0.0, mean * mean - rm2 * rm0 + 0.25 * (r1 - rm1) * (r1 - rm1)));

  return SubspaceEntanglement{std::move(k),
                              DensityMatrix::create(0.5 * (rk + rk.adjoint()), dims),
                              min_pt < -tol.ppt,
                              s,
                              v_index,
                              w_index,
                              k_block,
                              std::move(block),
                              std::move(block_pt),
                              min_pt,
                              0.5 * (r1 + rm1),
                              mean + root,
                              mean - root};
}

}  // namespace qfact
