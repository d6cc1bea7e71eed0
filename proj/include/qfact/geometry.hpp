#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include "qfact/states.hpp"

namespace qfact::geometry {

/// Correlation coordinates (c_x, c_y, c_z) of a Bell-diagonal two-qubit state.
using CVector = std::array<double, 3>;

enum class RegionLabel { Unphysical = 0, EntangledTetra = 1, SeparablePyramid = 2, KzBall = 3 };
std::string to_string(RegionLabel label);
RegionLabel parse_region_label(std::string_view name);

/// (1/4)(I + sum c_i sigma_i (x) sigma_i); throws InvalidStateError for unphysical c.
DensityMatrix state_from_c(const CVector& c, const Tolerances& tol = default_tolerances());

/// Eigenvalues on phi+, phi-, psi+, psi- (in that order):
///   (1 + cx - cy + cz)/4, (1 - cx + cy + cz)/4, (1 + cx + cy - cz)/4, (1 - cx - cy - cz)/4.
std::array<double, 4> eigenvalues_of_c(const CVector& c);

/// The tetrahedron vertex at which the state is the given Bell projector.
CVector bell_vertex(BellLabel label);

bool is_physical(const CVector& c, const Tolerances& tol = default_tolerances());

/// Boundary points go to the more separable region.
RegionLabel classify(const CVector& c, const Tolerances& tol = default_tolerances());

/// Grid coordinate -1 + 2 i / (resolution - 1).
double grid_coordinate(std::size_t i, std::size_t resolution);
/// Point with flat grid index (ix * n + iy) * n + iz.
CVector grid_point(std::size_t flat, std::size_t resolution);

struct RegionSample {
  std::size_t resolution = 0;
  std::vector<RegionLabel> labels;  // flat grid order
  std::array<std::size_t, 4> counts{};

  std::size_t count(RegionLabel l) const { return counts[static_cast<std::size_t>(l)]; }
  std::size_t physical() const;
  /// (pyramid + ball) / physical.
  double separable_fraction() const;
};

/// Classifies every point of the resolution^3 grid over [-1, 1]^3. Throws for resolution < 2.
RegionSample sample_region(std::size_t resolution, bool parallel = true,
                           const Tolerances& tol = default_tolerances());

void write_csv(std::ostream& os, const RegionSample& s);
void write_json_lines(std::ostream& os, const RegionSample& s);

}  // namespace qfact::geometry
