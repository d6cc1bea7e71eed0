#pragma once

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "qfact/random.hpp"
#include "qfact/states.hpp"

namespace qfact::testing {

inline DensityMatrix random_state(Dims dims, Rng& rng) {
  return DensityMatrix::create(random_density_matrix(dims.total(), rng), dims);
}

// Determinant by LU with partial pivoting (real part), used as a
// characteristic-polynomial oracle: det(m - x I) = 0 at every eigenvalue.
inline double det(ComplexMatrix m) {
  const std::size_t n = m.dim();
  cplx d = 1.0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m(r, c)) > std::abs(m(p, c))) p = r;
    if (std::abs(m(p, c)) == 0.0) return 0.0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      const cplx f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return d.real();
}

inline double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace qfact::testing
