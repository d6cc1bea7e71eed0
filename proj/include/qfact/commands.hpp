#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qfact/geometry.hpp"
#include "qfact/io.hpp"
#include "qfact/teleport.hpp"

namespace qfact::cli {

using io::json;

struct RunConfig {
  std::uint64_t seed = 0;
  Tolerances tol;
};

/// Applies "NAME=VALUE" to tol. Throws std::invalid_argument on bad syntax or unknown name.
void apply_tol_override(Tolerances& tol, const std::string& assignment);

json cmd_analyze(const io::StateFile& input, const RunConfig& cfg);

struct TailorRequest {
  io::PureStateFile psi;
  std::size_t k = 2;
  std::size_t l = 2;
  Vector lambdas;
  std::optional<ComplexMatrix> unitary;
};
json cmd_tailor(const TailorRequest& req, const RunConfig& cfg);

/// Sets "converged" to false when the separable search stopped at its cap.
json cmd_witness(const io::StateFile& input, const RunConfig& cfg, std::size_t product_samples = 10000);

struct TeleportRequest {
  std::string input = "random";     // up, down, plus, minus, random, or a pure-state file path
  std::string resource = "psi-";    // Bell label, "maximal" (uses dim), or a pure-state file path
  std::size_t dim = 2;
  bool all_outcomes = true;         // else one seeded-random outcome
};
json cmd_teleport(const TeleportRequest& req, const RunConfig& cfg);

json cmd_geometry_point(const geometry::CVector& c, const RunConfig& cfg);
json geometry_summary(const geometry::RegionSample& s);

}  // namespace qfact::cli
