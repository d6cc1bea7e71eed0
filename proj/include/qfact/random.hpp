#pragma once

#include <cstdint>
#include <random>

#include "qfact/linalg.hpp"

namespace qfact {

/// Seeded random stream. Independent streams for parallel tasks are derived
/// from (seed, index) so results do not depend on scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(mix(seed)) {}
  Rng(std::uint64_t seed, std::uint64_t stream) : engine_(mix(mix(seed) ^ (stream + 0x9e3779b97f4a7c15ULL))) {}

  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  double normal() { return normal_(engine_); }
  cplx complex_normal() { return {normal(), normal()}; }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }

  static std::uint64_t mix(std::uint64_t x);  // splitmix64 finalizer

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

Vector random_pure_vector(std::size_t dim, Rng& rng);
/// Haar-random unitary: Gram-Schmidt of a complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);
/// Hilbert-Schmidt random density matrix G G^dagger / Tr(G G^dagger), G complex Gaussian.
ComplexMatrix random_density_matrix(std::size_t dim, Rng& rng);
/// Random Hermitian matrix with i.i.d. Gaussian entries (GUE-like).
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);
/// Probability vector of length n drawn uniformly from the simplex.
std::vector<double> random_simplex(std::size_t n, Rng& rng);

}  // namespace qfact
