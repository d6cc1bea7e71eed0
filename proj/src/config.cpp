#include "qfact/config.hpp"

#include <cmath>
#include <string>

namespace qfact {

namespace {

struct Field {
  const char* name;
  double Tolerances::*real = nullptr;
  int Tolerances::*integer = nullptr;
};

constexpr Field kFields[] = {
    {"eig_offdiag", &Tolerances::eig_offdiag},
    {"eig_max_sweeps", nullptr, &Tolerances::eig_max_sweeps},
    {"degenerate_gap", &Tolerances::degenerate_gap},
    {"hermitian", &Tolerances::hermitian},
    {"density", &Tolerances::density},
    {"ppt", &Tolerances::ppt},
    {"unitary", &Tolerances::unitary},
    {"gram_schmidt", &Tolerances::gram_schmidt},
    {"rank", &Tolerances::rank},
    {"schmidt", &Tolerances::schmidt},
    {"kz_slack", &Tolerances::kz_slack},
    {"geometry_slack", &Tolerances::geometry_slack},
    {"lmo_change", &Tolerances::lmo_change},
    {"lmo_restarts", nullptr, &Tolerances::lmo_restarts},
    {"fw_gap", &Tolerances::fw_gap},
    {"fw_max_iter", nullptr, &Tolerances::fw_max_iter},
    {"proj_change", &Tolerances::proj_change},
    {"proj_max_iter", nullptr, &Tolerances::proj_max_iter},
};

}  // namespace

void Tolerances::set(std::string_view name, double value) {
  if (!std::isfinite(value) || value < 0.0)
    throw std::invalid_argument("tolerance " + std::string(name) + " must be finite and non-negative");
  for (const auto& f : kFields) {
    if (name != f.name) continue;
    if (f.real) {
      this->*f.real = value;
    } else {
      this->*f.integer = static_cast<int>(value);
    }
    return;
  }
  throw std::invalid_argument("unknown tolerance name: " + std::string(name));
}

std::vector<std::string> Tolerances::names() {
  std::vector<std::string> out;
  for (const auto& f : kFields) out.emplace_back(f.name);
  return out;
}

const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

}  // namespace qfact
