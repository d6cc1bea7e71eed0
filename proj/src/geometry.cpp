#include "qfact/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"

#include "qfact/criteria.hpp"
#include "qfact/kernels.hpp"

namespace qfact::geometry {

std::string to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::Unphysical: return "Unphysical";
    case RegionLabel::EntangledTetra: return "EntangledTetra";
    case RegionLabel::SeparablePyramid: return "SeparablePyramid";
    case RegionLabel::KzBall: return "KzBall";
  }
  return "?";
}

RegionLabel parse_region_label(std::string_view name) {
  for (auto l : {RegionLabel::Unphysical, RegionLabel::EntangledTetra, RegionLabel::SeparablePyramid,
                 RegionLabel::KzBall})
    if (to_string(l) == name) return l;
  throw std::invalid_argument("unknown region label: " + std::string(name));
}

std::array<double, 4> eigenvalues_of_c(const CVector& c) {
  const double x = c[0], y = c[1], z = c[2];
  return {(1 + x - y + z) / 4, (1 - x + y + z) / 4, (1 + x + y - z) / 4, (1 - x - y - z) / 4};
}

CVector bell_vertex(BellLabel label) {
  switch (label) {
    case BellLabel::PhiPlus: return {1, -1, 1};
    case BellLabel::PhiMinus: return {-1, 1, 1};
    case BellLabel::PsiPlus: return {1, 1, -1};
    case BellLabel::PsiMinus: return {-1, -1, -1};
  }
  return {0, 0, 0};
}

bool is_physical(const CVector& c, const Tolerances& tol) {
  for (double e : eigenvalues_of_c(c))
    if (e < -tol.geometry_slack) return false;
  return true;
}

DensityMatrix state_from_c(const CVector& c, const Tolerances& tol) {
  if (!is_physical(c, tol))
    throw InvalidStateError("c = (" + std::to_string(c[0]) + ", " + std::to_string(c[1]) + ", " +
                            std::to_string(c[2]) + ") lies outside the tetrahedron of states");
  return DensityMatrix::create(bell_diagonal_matrix(c), {2, 2}, tol);
}

RegionLabel classify(const CVector& c, const Tolerances& tol) {
  if (!is_physical(c, tol)) return RegionLabel::Unphysical;
  // Same test as kz_ball_member, without re-validating the state.
  const ComplexMatrix centre = ComplexMatrix::identity(4) * 0.25;
  if (hs_distance(bell_diagonal_matrix(c), centre) <= kz_radius(4) + tol.kz_slack) return RegionLabel::KzBall;
  if (std::abs(c[0]) + std::abs(c[1]) + std::abs(c[2]) <= 1.0 + tol.geometry_slack)
    return RegionLabel::SeparablePyramid;
  return RegionLabel::EntangledTetra;
}

double grid_coordinate(std::size_t i, std::size_t resolution) {
  return -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(resolution - 1);
}

CVector grid_point(std::size_t flat, std::size_t n) {
  return {grid_coordinate(flat / (n * n), n), grid_coordinate((flat / n) % n, n), grid_coordinate(flat % n, n)};
}

std::size_t RegionSample::physical() const { return labels.size() - count(RegionLabel::Unphysical); }

double RegionSample::separable_fraction() const {
  const std::size_t p = physical();
  if (p == 0) return 0.0;
  return static_cast<double>(count(RegionLabel::SeparablePyramid) + count(RegionLabel::KzBall)) /
         static_cast<double>(p);
}

RegionSample sample_region(std::size_t resolution, bool parallel, const Tolerances& tol) {
  if (resolution < 2) throw std::invalid_argument("grid resolution must be at least 2");
  RegionSample s;
  s.resolution = resolution;
  s.labels = parallel ? kernels::classify_grid_parallel(resolution, tol) : kernels::classify_grid_serial(resolution, tol);
  for (RegionLabel l : s.labels) ++s.counts[static_cast<std::size_t>(l)];
  return s;
}

void write_csv(std::ostream& os, const RegionSample& s) {
  os << "cx,cy,cz,label\n";
  char buf[96];
  for (std::size_t i = 0; i < s.labels.size(); ++i) {
    CVector c = grid_point(i, s.resolution);
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,", c[0], c[1], c[2]);
    os << buf << to_string(s.labels[i]) << '\n';
  }
}

void write_json_lines(std::ostream& os, const RegionSample& s) {
  for (std::size_t i = 0; i < s.labels.size(); ++i) {
    CVector c = grid_point(i, s.resolution);
    nlohmann::json j = {{"c", {c[0], c[1], c[2]}}, {"label", to_string(s.labels[i])}};
    os << j.dump() << '\n';
  }
}

}  // namespace qfact::geometry
