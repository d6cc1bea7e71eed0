#include "qfact/golden.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qfact/criteria.hpp"
#include "qfact/factorization.hpp"
#include "qfact/geometry.hpp"
#include "qfact/teleport.hpp"

namespace qfact {

std::vector<ComplexMatrix> tailored_closed_form(double l1, double l2) {
  const cplx i(0.0, 1.0);
  const ComplexMatrix sx{{0, l2, l1, 0}, {l2, 0, 0, l1}, {l1, 0, 0, -l2}, {0, l1, -l2, 0}};
  const ComplexMatrix sy{{0, i * l2, -i * l1, 0}, {-i * l2, 0, 0, -i * l1}, {i * l1, 0, 0, -i * l2}, {0, i * l1, i * l2, 0}};
  const ComplexMatrix sz{{l1 * l1 - l2 * l2, 0, 0, -2 * l1 * l2},
                         {0, 1, 0, 0},
                         {0, 0, -1, 0},
                         {-2 * l1 * l2, 0, 0, -l1 * l1 + l2 * l2}};
  return {0.5 * sx, 0.5 * sy, 0.5 * sz};
}

namespace {

class Suite {
 public:
  void check(std::string name, double error, double tol, std::string detail = {}) {
    items_.push_back({std::move(name), std::isfinite(error) && error <= tol, error, tol, std::move(detail)});
  }
  void check_true(std::string name, bool ok, std::string detail = {}) {
    items_.push_back({std::move(name), ok, ok ? 0.0 : 1.0, 0.0, std::move(detail)});
  }
  std::vector<GoldenItem> take() { return std::move(items_); }

 private:
  std::vector<GoldenItem> items_;
};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return a.size() == b.size() ? m : INFINITY;
}

}  // namespace

std::vector<GoldenItem> run_golden_suite() {
  Suite s;
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);

  {
    ComplexMatrix ss = kron(pauli::x(), pauli::x()) + kron(pauli::y(), pauli::y()) + kron(pauli::z(), pauli::z());
    ComplexMatrix id = ComplexMatrix::identity(4);
    const double v = ((id - ss) * 0.25 * ((id + ss) * 0.25)).trace().real();
    s.check("singlet_witness_trace", std::abs(v + 0.5), 0.0, "Tr = " + fmt(v));
  }

  const DensityMatrix rho_u = paper_state(PaperMatrix::RhoU);
  const DensityMatrix rho_v = paper_state(PaperMatrix::RhoV);
  const DensityMatrix rho_ku = paper_state(PaperMatrix::RhoKU);
  const DensityMatrix rho_kv = paper_state(PaperMatrix::RhoKV);
  const ComplexMatrix k = paper_matrix(PaperMatrix::K);
  const ComplexMatrix centre = ComplexMatrix::identity(4) * 0.25;

  s.check("spectrum_rho_U", max_diff(eigenvalues(rho_u.matrix()), {0.5, 0.5, 0.0, 0.0}), 1e-9);
  {
    const double du = hs_distance(rho_u.matrix(), centre), dv = hs_distance(rho_v.matrix(), centre);
    s.check("hs_distance_rho_U_tracial", std::abs(du - 0.5), 1e-12, fmt(du));
    s.check("hs_distance_rho_V_tracial", std::abs(dv - 0.25), 1e-12, fmt(dv));
  }
  s.check("kz_radius_D4", std::abs(kz_radius(4) - 1.0 / std::sqrt(12.0)), 1e-12, fmt(kz_radius(4)));
  s.check_true("rho_U_outside_kz_ball", !kz_ball_member(rho_u));
  s.check_true("rho_V_inside_kz_ball", kz_ball_member(rho_v));
  s.check_true("rho_U_separable", decide_separability(rho_u).status == Separability::Separable);

  s.check("K_rho_U_K_dagger", max_abs_diff(k * rho_u.matrix() * k.adjoint(), rho_ku.matrix()), 1e-12);
  s.check("K_rho_V_K_dagger", max_abs_diff(k * rho_v.matrix() * k.adjoint(), rho_kv.matrix()), 1e-12);
  {
    const ComplexMatrix pt = partial_transpose(rho_ku.matrix(), {2, 2}, Subsystem::B);
    const Vector x{1.0 - r2, 0.0, 0.0, 1.0};
    const Vector lhs = pt * x;
    double err = 0.0;
    for (std::size_t i = 0; i < 4; ++i) err = std::max(err, std::abs(lhs[i] - (1.0 - r2) / 4.0 * x[i]));
    s.check("pt_rho_KU_eigenvector", err, 1e-9);
    const PptResult ppt = ppt_check(rho_ku);
    s.check("pt_rho_KU_min_eigenvalue", std::abs(ppt.min_eigenvalue - (1.0 - r2) / 4.0), 1e-9, fmt(ppt.min_eigenvalue));
    s.check_true("rho_KU_entangled", decide_separability(rho_ku).status == Separability::Entangled);
  }
  {
    auto ev = eigenvalues(partial_transpose(rho_kv.matrix(), {2, 2}, Subsystem::B) * 8.0);
    s.check("spectrum_8_pt_rho_KV", max_diff(ev, {2.0 + r2, 2.0, 2.0, 2.0 - r2}), 1e-9);
    s.check_true("rho_KV_separable", decide_separability(rho_kv).status == Separability::Separable);
  }
  {
    const double lu = two_qubit_lemma_value(rho_u), lv = two_qubit_lemma_value(rho_v);
    s.check("lemma_rho_U", std::abs(lu - 0.5), 1e-9, fmt(lu));
    s.check("lemma_rho_V_normalized", std::abs(lv - (1.0 - r3) / 4.0), 1e-9, fmt(lv));
    s.check_true("lemma_signs", lu > 0.0 && lv < 0.0);
  }

  // Tailored observables with the explicit 4x4 unitary.
  for (auto [l1, l2] : {std::pair{0.6, 0.8}, std::pair{1.0 / r2, 1.0 / r2}, std::pair{1.0, 0.0}}) {
    const ComplexMatrix u = simple_tailor_unitary(l1, l2);
    const Vector lambdas{l1, l2};
    const Vector phi{l1, 0.0, 0.0, l2};
    const Vector psi = u * phi;
    const auto t = tailor_with_unitary(psi, 2, 2, lambdas, u);
    const auto closed = tailored_closed_form(l1, l2);
    double err = 0.0;
    for (int i = 0; i < 3; ++i) err = std::max(err, max_abs_diff(t.generators_a[i], closed[i]));
    s.check("tailored_generators_lambda_" + fmt(l1) + "_" + fmt(l2), err, 1e-12);
  }

  {
    // Splitted state: beta = 0.6 on phi+, the rest on psi-.
    const DensityMatrix pi = bell_state(BellLabel::PhiPlus).density();
    const ComplexMatrix sigma = bell_state(BellLabel::PsiMinus).density().matrix();
    const auto rho = DensityMatrix::create(0.6 * pi.matrix() + 0.4 * sigma, {2, 2});
    const double v = witness_eval(rho, splitted_witness(pi, 2));
    s.check("splitted_witness_beta_0.6", std::abs(v + 0.2), 1e-12, fmt(v));
  }

  {
    // Teleportation through psi-: amplitudes and Bob's conditional states for input (a, b).
    const double a = 0.6, b = 0.8;
    const auto terms = teleport::decompose_over_bell(PureState::create({a, b}, {2, 1}),
                                                     teleport::ResourceState::bell(BellLabel::PsiMinus));
    struct Expect {
      BellLabel label;
      double amp;
      Vector bob;
    };
    const Expect want[] = {{BellLabel::PsiMinus, -0.5, {a, b}},
                           {BellLabel::PhiMinus, 0.5, {b, a}},
                           {BellLabel::PhiPlus, 0.5, {-b, a}},
                           {BellLabel::PsiPlus, -0.5, {a, -b}}};
    double err = 0.0;
    for (const auto& w : want) {
      const auto& t = terms[static_cast<std::size_t>(w.label)];
      err = std::max(err, std::abs(t.amplitude - w.amp));
      for (std::size_t i = 0; i < 2; ++i) err = std::max(err, std::abs(t.bob_state[i] - w.bob[i]));
    }
    s.check("teleport_psi_minus_expansion", err, 1e-12);
  }

  {
    const auto c = geometry::CVector{1.0, 0.0, 0.0};
    s.check("state_from_c_100_is_rho_U", max_abs_diff(geometry::state_from_c(c).matrix(), rho_u.matrix()), 1e-15);
    s.check_true("classify_c_100_pyramid", geometry::classify(c) == geometry::RegionLabel::SeparablePyramid);
  }
  return s.take();
}

}  // namespace qfact
