#include "qfact/kernels.hpp"

#include <algorithm>
#include <limits>

#include "qfact/criteria.hpp"
#include "qfact/random.hpp"

namespace qfact::kernels {

namespace {

double product_expectation(const ComplexMatrix& e, Dims dims, std::uint64_t seed, std::size_t i) {
  Rng rng(seed, i);
  Vector a = random_pure_vector(dims.d1, rng);
  Vector b = random_pure_vector(dims.d2, rng);
  Vector v = kron(a, b);
  return inner(v, e * v).real();
}

double rotated_min_pt(const DensityMatrix& rho, std::uint64_t seed, std::size_t i, const Tolerances& tol) {
  Rng rng(seed, i);
  ComplexMatrix u = random_unitary(rho.dim(), rng);
  ComplexMatrix r = u * rho.matrix() * u.adjoint();
  // Rounding leaves r Hermitian only to ~1e-16; symmetrize before the eigensolver sees it.
  r = 0.5 * (r + r.adjoint());
  auto ev = eigenvalues(partial_transpose(r, rho.dims(), Subsystem::B), tol);
  return ev.back();
}

}  // namespace

std::vector<geometry::RegionLabel> classify_grid_serial(std::size_t n, const Tolerances& tol) {
  std::vector<geometry::RegionLabel> out(n * n * n);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = geometry::classify(geometry::grid_point(i, n), tol);
  return out;
}

std::vector<geometry::RegionLabel> classify_grid_parallel(std::size_t n, const Tolerances& tol) {
  std::vector<geometry::RegionLabel> out(n * n * n);
  const auto total = static_cast<std::int64_t>(out.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i)
    out[static_cast<std::size_t>(i)] = geometry::classify(geometry::grid_point(static_cast<std::size_t>(i), n), tol);
  return out;
}

double min_product_expectation_serial(const ComplexMatrix& e, Dims dims, std::size_t samples, std::uint64_t seed) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples; ++i) best = std::min(best, product_expectation(e, dims, seed, i));
  return best;
}

double min_product_expectation_parallel(const ComplexMatrix& e, Dims dims, std::size_t samples, std::uint64_t seed) {
  double best = std::numeric_limits<double>::infinity();
  const auto total = static_cast<std::int64_t>(samples);
#pragma omp parallel for reduction(min : best) schedule(static)
  for (std::int64_t i = 0; i < total; ++i)
    best = std::min(best, product_expectation(e, dims, seed, static_cast<std::size_t>(i)));
  return best;
}

Survival ppt_survival_serial(const DensityMatrix& rho, std::size_t trials, std::uint64_t seed, const Tolerances& tol) {
  Survival s{trials, 0, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < trials; ++i) {
    double m = rotated_min_pt(rho, seed, i, tol);
    if (m < -tol.ppt) ++s.failures;
    s.worst_min_eigenvalue = std::min(s.worst_min_eigenvalue, m);
  }
  return s;
}

Survival ppt_survival_parallel(const DensityMatrix& rho, std::size_t trials, std::uint64_t seed,
                               const Tolerances& tol) {
  std::vector<double> mins(trials);
  const auto total = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i)
    mins[static_cast<std::size_t>(i)] = rotated_min_pt(rho, seed, static_cast<std::size_t>(i), tol);
  Survival s{trials, 0, std::numeric_limits<double>::infinity()};
  for (double m : mins) {
    if (m < -tol.ppt) ++s.failures;
    s.worst_min_eigenvalue = std::min(s.worst_min_eigenvalue, m);
  }
  return s;
}

}  // namespace qfact::kernels
