#include "qfact/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qfact/factorization.hpp"

namespace qfact {

Witness Witness::create(ComplexMatrix e, const Tolerances& tol) {
  if (!e.is_finite() || !e.is_hermitian(tol.density)) throw std::invalid_argument("witness: operator is not Hermitian");
  return Witness(std::move(e));
}

PptResult ppt_check(const DensityMatrix& rho, const Tolerances& tol) {
  ComplexMatrix pt = partial_transpose(rho.matrix(), rho.dims(), Subsystem::B);
  pt = 0.5 * (pt + pt.adjoint());
  const auto eig = hermitian_eig(pt, tol);
  const std::size_t last = eig.eigenvalues.size() - 1;
  return {eig.eigenvalues[last] >= -tol.ppt, eig.eigenvalues[last], eig.eigenvectors.column(last)};
}

std::string to_string(Separability s) {
  switch (s) {
    case Separability::Entangled: return "entangled";
    case Separability::Separable: return "separable";
    case Separability::PptUndecided: return "ppt-undecided";
  }
  return "?";
}

namespace {

bool ppt_is_sufficient(Dims dims) {
  const auto lo = std::min(dims.d1, dims.d2), hi = std::max(dims.d1, dims.d2);
  return lo == 1 || (lo == 2 && hi <= 3);
}

}  // namespace

Verdict decide_separability(const DensityMatrix& rho, const Tolerances& tol) {
  Verdict v;
  if (std::min(rho.dims().d1, rho.dims().d2) == 1) {
    v.status = Separability::Separable;
    return v;
  }
  const auto ppt = ppt_check(rho, tol);
  if (!ppt.is_ppt) {
    v.status = Separability::Entangled;
    v.negative = NegativeEigenvalue{ppt.min_eigenvalue, ppt.min_eigenvector};
    // The projector onto the negative PT eigenvector, partially transposed, is
    // a witness: Tr(rho (|x><x|)^PT) = <x|rho^PT|x> < 0.
    ComplexMatrix w = partial_transpose(ComplexMatrix::projector(ppt.min_eigenvector), rho.dims(), Subsystem::B);
    v.witness = Witness::create(0.5 * (w + w.adjoint()), tol);
    return v;
  }
  v.status = ppt_is_sufficient(rho.dims()) ? Separability::Separable : Separability::PptUndecided;
  return v;
}

double witness_eval(const ComplexMatrix& rho, const Witness& w) {
  if (rho.dim() != w.matrix().dim()) throw DimensionError("witness_eval: dimension mismatch");
  // Tr(rho E) = <rho|E> for Hermitian rho.
  return hs_inner(rho, w.matrix()).real();
}

double witness_eval(const DensityMatrix& rho, const Witness& w) { return witness_eval(rho.matrix(), w); }

Witness splitted_witness(const DensityMatrix& pi, std::size_t d, const Tolerances& tol) {
  if (pi.dims() != Dims{d, d}) throw std::invalid_argument("splitted_witness: projector must live on C^d (x) C^d");
  if (!is_pure(pi, tol.density)) throw std::invalid_argument("splitted_witness: not a rank-one projector");
  const auto eig = hermitian_eig(pi.matrix(), tol);
  const auto form = schmidt_decompose(eig.eigenvectors.column(0), pi.dims());
  const double target = 1.0 / std::sqrt(static_cast<double>(d));
  for (double c : form.coefficients)
    if (std::abs(c - target) > tol.schmidt)
      throw std::invalid_argument("splitted_witness: projected state is not maximally entangled");
  ComplexMatrix e = ComplexMatrix::identity(d * d) - static_cast<double>(d) * pi.matrix();
  return Witness::create(std::move(e), tol);
}

namespace {

// <b| m |b> contracted on the second factor, leaving an operator on the first.
ComplexMatrix contract_b(const ComplexMatrix& m, Dims dims, const Vector& b) {
  const auto [d1, d2] = dims;
  ComplexMatrix out(d1);
  for (std::size_t j = 0; j < d1; ++j)
    for (std::size_t jp = 0; jp < d1; ++jp) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < d2; ++k) {
        const cplx bk = std::conj(b[k]);
        for (std::size_t kp = 0; kp < d2; ++kp) s += bk * m(j * d2 + k, jp * d2 + kp) * b[kp];
      }
      out(j, jp) = s;
    }
  return 0.5 * (out + out.adjoint());
}

ComplexMatrix contract_a(const ComplexMatrix& m, Dims dims, const Vector& a) {
  const auto [d1, d2] = dims;
  ComplexMatrix out(d2);
  for (std::size_t k = 0; k < d2; ++k)
    for (std::size_t kp = 0; kp < d2; ++kp) {
      cplx s = 0.0;
      for (std::size_t j = 0; j < d1; ++j) {
        const cplx aj = std::conj(a[j]);
        for (std::size_t jp = 0; jp < d1; ++jp) s += aj * m(j * d2 + k, jp * d2 + kp) * a[jp];
      }
      out(k, kp) = s;
    }
  return 0.5 * (out + out.adjoint());
}

std::pair<Vector, double> top_eigen(const ComplexMatrix& m, const Tolerances& tol) {
  const auto eig = hermitian_eig(m, tol);
  return {eig.eigenvectors.column(0), eig.eigenvalues[0]};
}

ProductMaximum alternate_from(const ComplexMatrix& m, Dims dims, Vector b, const Tolerances& tol) {
  ProductMaximum best;
  double previous = -std::numeric_limits<double>::infinity();
  for (int it = 0; it < 1000; ++it) {
    auto [a, va] = top_eigen(contract_b(m, dims, b), tol);
    auto [bn, vb] = top_eigen(contract_a(m, dims, a), tol);
    best = {std::move(a), std::move(bn), vb};
    b = best.b;
    if (std::abs(vb - previous) < tol.lmo_change) break;
    previous = vb;
  }
  return best;
}

}  // namespace

ProductMaximum max_product_expectation(const ComplexMatrix& m, Dims dims, Rng& rng, const Tolerances& tol,
                                       const std::vector<Vector>& warm_starts) {
  if (m.dim() != dims.total()) throw DimensionError("max_product_expectation: split does not match operator");
  ProductMaximum best;
  best.value = -std::numeric_limits<double>::infinity();
  auto consider = [&](ProductMaximum candidate) {
    if (candidate.value > best.value) best = std::move(candidate);
  };
  for (const auto& b : warm_starts) consider(alternate_from(m, dims, b, tol));
  for (int r = 0; r < std::max(1, tol.lmo_restarts); ++r) consider(alternate_from(m, dims, random_pure_vector(dims.d2, rng), tol));
  return best;
}

namespace {

// Minimizes 0.5 w^T q w - lin^T w over the probability simplex by pairwise
// conditional-gradient steps with exact line search, starting from w.
void solve_simplex_qp(const std::vector<std::vector<double>>& q, const std::vector<double>& lin,
                      std::vector<double>& w) {
  const std::size_t n = w.size();
  std::vector<double> g(n);
  auto refresh = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      double s = -lin[i];
      for (std::size_t j = 0; j < n; ++j) s += q[i][j] * w[j];
      g[i] = s;
    }
  };
  refresh();
  for (int it = 0; it < 200000; ++it) {
    if (it % 500 == 499) refresh();
    std::size_t s = 0, a = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] < g[s]) s = i;
      if (w[i] > 0.0 && (a == n || g[i] > g[a])) a = i;
    }
    const double delta = g[a] - g[s];
    if (a == s || delta <= 1e-15) break;
    const double curvature = q[s][s] + q[a][a] - 2.0 * q[s][a];
    double gamma = curvature > 0.0 ? delta / curvature : w[a];
    if (gamma >= w[a]) gamma = w[a];
    w[s] += gamma;
    w[a] = gamma == w[a] ? 0.0 : w[a] - gamma;
    for (std::size_t i = 0; i < n; ++i) g[i] += gamma * (q[i][s] - q[i][a]);
  }
}

ComplexMatrix mixture(const std::vector<Vector>& atoms, const std::vector<double>& w, std::size_t dim) {
  ComplexMatrix x(dim);
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (w[i] == 0.0) continue;
    const auto& v = atoms[i];
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) x(r, c) += w[i] * v[r] * std::conj(v[c]);
  }
  return x;
}

double expectation(const ComplexMatrix& m, const Vector& v) { return inner(v, m * v).real(); }

// Euclidean projection of x onto {p >= 0, sum p = 1}.
std::vector<double> project_simplex(std::vector<double> x) {
  std::vector<double> u = x;
  std::sort(u.begin(), u.end(), std::greater<>());
  double acc = 0.0, theta = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    acc += u[i];
    const double t = (acc - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) theta = t;
  }
  for (double& v : x) v = std::max(v - theta, 0.0);
  return x;
}

// Nearest trace-one positive semidefinite matrix to the Hermitian matrix m.
ComplexMatrix project_states(const ComplexMatrix& m, const Tolerances& tol) {
  const auto eig = hermitian_eig(0.5 * (m + m.adjoint()), tol);
  const auto p = project_simplex(eig.eigenvalues);
  const std::size_t n = m.dim();
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (p[k] == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        out(r, c) += p[k] * eig.eigenvectors(r, k) * std::conj(eig.eigenvectors(c, k));
  }
  return out;
}

// Dykstra's alternating projections onto states and onto partial-transpose states.
// Converges to the nearest PPT state, which is the nearest separable one in 2x2 / 2x3.
ComplexMatrix nearest_ppt(const DensityMatrix& rho, const Tolerances& tol) {
  const Dims dims = rho.dims();
  const std::size_t n = dims.total();
  ComplexMatrix x = rho.matrix(), p(n), q(n), y(n);
  for (int it = 0; it < tol.proj_max_iter; ++it) {
    y = project_states(x + p, tol);
    p = x + p - y;
    ComplexMatrix z = partial_transpose(project_states(partial_transpose(y + q, dims, Subsystem::B), tol), dims,
                                        Subsystem::B);
    q = y + q - z;
    const double change = hs_distance(z, x);
    x = std::move(z);
    if (change * change <= tol.proj_change * tol.proj_change) break;
  }
  // End on the state side so the result is exactly positive with unit trace.
  return project_states(x, tol);
}

}  // namespace

NearestSeparable nearest_separable(const DensityMatrix& rho, std::uint64_t seed, const Tolerances& tol) {
  const Dims dims = rho.dims();
  if (!ppt_is_sufficient(dims)) return nearest_separable_cg(rho, seed, tol);
  if (decide_separability(rho, tol).status == Separability::Separable)
    return NearestSeparable{rho, 0.0, true, 0, 0.0, {0.0}, {}, {}};

  const std::size_t n = dims.total();
  Rng rng(seed);
  const ComplexMatrix x = nearest_ppt(rho, tol);
  NearestSeparable out{DensityMatrix::create(x, dims, tol), hs_distance(rho.matrix(), x), false, 1, 0.0, {}, {}, {}};
  out.history.push_back(out.distance);
  // Certify with the product-state oracle: gap = max_s <rho - x, s> - <rho - x, x>.
  const ComplexMatrix g = rho.matrix() - x;
  const auto eig = hermitian_eig(0.5 * (g + g.adjoint()), tol);
  std::vector<Vector> warm;
  for (std::size_t k = 0; k < std::min<std::size_t>(n, 4); ++k)
    warm.push_back(schmidt_decompose(eig.eigenvectors.column(k), dims).basis_b[0]);
  const auto best = max_product_expectation(g, dims, rng, tol, warm);
  out.gap = best.value - hs_inner(g, x).real();
  out.converged = out.gap <= tol.fw_gap;
  return out;
}

NearestSeparable nearest_separable_cg(const DensityMatrix& rho, std::uint64_t seed, const Tolerances& tol) {
  const Dims dims = rho.dims();
  const std::size_t n = dims.total();
  Rng rng(seed);

  // Start from the tracial state, a uniform mixture of product basis vectors.
  std::vector<Vector> atoms;
  std::vector<Vector> b_parts;
  for (std::size_t j = 0; j < dims.d1; ++j)
    for (std::size_t k = 0; k < dims.d2; ++k) {
      atoms.push_back(basis_vector(n, j * dims.d2 + k));
      b_parts.push_back(basis_vector(dims.d2, k));
    }
  std::vector<double> w(atoms.size(), 1.0 / static_cast<double>(n));
  std::vector<std::vector<double>> q(atoms.size(), std::vector<double>(atoms.size()));
  std::vector<double> lin(atoms.size());
  auto rebuild = [&] {
    const std::size_t m = atoms.size();
    q.assign(m, std::vector<double>(m));
    lin.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      lin[i] = expectation(rho.matrix(), atoms[i]);
      for (std::size_t j = i; j < m; ++j) q[i][j] = q[j][i] = std::norm(inner(atoms[i], atoms[j]));
    }
  };
  rebuild();
  solve_simplex_qp(q, lin, w);

  NearestSeparable out{rho, 0.0, false, 0, 0.0, {}, {}, {}};
  ComplexMatrix x = mixture(atoms, w, n);
  for (int iter = 0;; ++iter) {
    const ComplexMatrix g = rho.matrix() - x;
    out.history.push_back(hs_norm(g));
    out.iterations = iter;

    // Warm-start the product search from the heaviest current atoms.
    std::vector<std::size_t> order(atoms.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] > w[b]; });
    std::vector<Vector> warm;
    for (std::size_t i = 0; i < std::min<std::size_t>(2, order.size()); ++i) warm.push_back(b_parts[order[i]]);
    const auto best = max_product_expectation(g, dims, rng, tol, warm);

    double current = 0.0;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (w[i] != 0.0) current += w[i] * expectation(g, atoms[i]);
    out.gap = best.value - current;
    if (out.gap <= tol.fw_gap) {
      out.converged = true;
      break;
    }
    if (iter >= tol.fw_max_iter) break;

    // Fully corrective step: add the new atom, re-optimize all weights, drop zeros.
    atoms.push_back(kron(best.a, best.b));
    b_parts.push_back(best.b);
    w.push_back(0.0);
    const std::size_t m = atoms.size();
    for (auto& row : q) row.push_back(0.0);
    q.emplace_back(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) q[i][m - 1] = q[m - 1][i] = std::norm(inner(atoms[i], atoms[m - 1]));
    lin.push_back(expectation(rho.matrix(), atoms[m - 1]));
    solve_simplex_qp(q, lin, w);

    std::size_t keep = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (w[i] <= 0.0) continue;
      if (keep != i) {
        atoms[keep] = std::move(atoms[i]);
        b_parts[keep] = std::move(b_parts[i]);
        w[keep] = w[i];
      }
      ++keep;
    }
    if (keep != atoms.size()) {
      atoms.resize(keep);
      b_parts.resize(keep);
      w.resize(keep);
      rebuild();
    }
    double total = 0.0;
    for (double v : w) total += v;
    for (double& v : w) v /= total;
    x = mixture(atoms, w, n);
  }

  x = 0.5 * (x + x.adjoint());
  out.rho0 = DensityMatrix::create(x, dims, tol);
  out.distance = hs_distance(rho.matrix(), x);
  out.atoms = atoms;
  out.weights = w;
  return out;
}

Witness optimal_witness(const DensityMatrix& rho_ent, const DensityMatrix& rho0) {
  if (rho_ent.dim() != rho0.dim()) throw DimensionError("optimal_witness: dimension mismatch");
  const ComplexMatrix diff = rho0.matrix() - rho_ent.matrix();
  const double n = hs_norm(diff);
  if (n < 1e-14) throw std::invalid_argument("optimal_witness: rho0 equals rho_ent (zero denominator)");
  const cplx shift = hs_inner(rho0.matrix(), diff);
  ComplexMatrix e = (diff - shift * ComplexMatrix::identity(diff.dim())) * (1.0 / n);
  return Witness::create(0.5 * (e + e.adjoint()));
}

double kz_radius(std::size_t total_dim) {
  const double d = static_cast<double>(total_dim);
  return 1.0 / std::sqrt(d * (d - 1.0));
}

bool kz_ball_member(const DensityMatrix& rho, const Tolerances& tol) {
  const std::size_t d = rho.dim();
  const ComplexMatrix centre = ComplexMatrix::identity(d) * (1.0 / static_cast<double>(d));
  return hs_distance(rho.matrix(), centre) <= kz_radius(d) + tol.kz_slack;
}

double two_qubit_lemma_value(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2}) throw DimensionError("absolute separability lemma: two-qubit state required");
  auto ev = eigenvalues(rho.matrix());
  for (auto& x : ev) x = std::max(x, 0.0);
  return ev[0] - ev[2] - 2.0 * std::sqrt(ev[1] * ev[3]);
}

bool absolutely_separable_2q(const DensityMatrix& rho) { return two_qubit_lemma_value(rho) <= 0.0; }

}  // namespace qfact
