#pragma once

#include <cstdint>

#include "qfact/geometry.hpp"

// Batch loops with an OpenMP version and a plain serial reference. Each task
// draws from its own Rng(seed, index) stream, so both versions return
// identical results for the same inputs.
namespace qfact::kernels {

std::vector<geometry::RegionLabel> classify_grid_serial(std::size_t resolution, const Tolerances& tol);
std::vector<geometry::RegionLabel> classify_grid_parallel(std::size_t resolution, const Tolerances& tol);

/// Minimum of Tr(|ab><ab| e) over `samples` random product vectors.
double min_product_expectation_serial(const ComplexMatrix& e, Dims dims, std::size_t samples, std::uint64_t seed);
double min_product_expectation_parallel(const ComplexMatrix& e, Dims dims, std::size_t samples, std::uint64_t seed);

struct Survival {
  std::size_t trials = 0;
  std::size_t failures = 0;          // rotated states that are not PPT
  double worst_min_eigenvalue = 0.0; // smallest PT eigenvalue seen
};

/// Applies `trials` random global unitaries to rho and runs the PPT test on each.
Survival ppt_survival_serial(const DensityMatrix& rho, std::size_t trials, std::uint64_t seed,
                             const Tolerances& tol = default_tolerances());
Survival ppt_survival_parallel(const DensityMatrix& rho, std::size_t trials, std::uint64_t seed,
                               const Tolerances& tol = default_tolerances());

}  // namespace qfact::kernels
