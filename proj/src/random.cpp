#include "qfact/random.hpp"

#include <cmath>

namespace qfact {

std::uint64_t Rng::mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Vector random_pure_vector(std::size_t dim, Rng& rng) {
  Vector v(dim);
  for (auto& x : v) x = rng.complex_normal();
  return normalized(v);
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  std::vector<Vector> cols(dim, Vector(dim));
  for (auto& c : cols)
    for (auto& x : c) x = rng.complex_normal();
  // Gaussian columns are independent with probability one.
  return from_columns(gram_schmidt_complete(cols, dim));
}

ComplexMatrix random_density_matrix(std::size_t dim, Rng& rng) {
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  ComplexMatrix rho = g * g.adjoint();
  rho *= cplx(1.0 / rho.trace().real());
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) rho(j, i) = std::conj(rho(i, j));
  for (std::size_t i = 0; i < dim; ++i) rho(i, i) = rho(i, i).real();
  return rho;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  ComplexMatrix h(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    h(i, i) = rng.normal();
    for (std::size_t j = i + 1; j < dim; ++j) {
      h(i, j) = rng.complex_normal() * std::sqrt(0.5);
      h(j, i) = std::conj(h(i, j));
    }
  }
  return h;
}

std::vector<double> random_simplex(std::size_t n, Rng& rng) {
  std::vector<double> p(n);
  double s = 0.0;
  for (auto& x : p) {
    x = -std::log(1.0 - rng.uniform());
    s += x;
  }
  for (auto& x : p) x /= s;
  return p;
}

}  // namespace qfact
