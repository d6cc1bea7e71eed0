#include "helpers.hpp"
#include "qfact/criteria.hpp"
#include "qfact/kernels.hpp"

using namespace qfact;
using namespace qfact::testing;

namespace {

// beta pi + (1 - beta) sigma with sigma a random state supported off the Bell vector.
DensityMatrix splitted(std::size_t d, double beta, Rng& rng, DensityMatrix& pi_out) {
  Vector phi(d * d);
  for (std::size_t i = 0; i < d; ++i) phi[i * d + i] = 1.0 / std::sqrt(static_cast<double>(d));
  const ComplexMatrix pi = ComplexMatrix::projector(phi);
  const ComplexMatrix q = ComplexMatrix::identity(d * d) - pi;
  ComplexMatrix sigma = q * random_density_matrix(d * d, rng) * q;
  sigma *= 1.0 / sigma.trace();
  pi_out = DensityMatrix::create(pi, {d, d});
  return DensityMatrix::create(beta * pi + (1.0 - beta) * sigma, {d, d});
}

}  // namespace

TEST_CASE("PPT on the worked matrices and products") {
  const PptResult ku = ppt_check(paper_state(PaperMatrix::RhoKU));
  CHECK_FALSE(ku.is_ppt);
  CHECK(ku.min_eigenvalue == doctest::Approx((1 - std::sqrt(2.0)) / 4).epsilon(1e-12));
  const Vector x = normalized(Vector{1 - std::sqrt(2.0), 0, 0, 1});
  CHECK(phase_distance(ku.min_eigenvector, x) < 1e-10);
  CHECK(ppt_check(paper_state(PaperMatrix::RhoKV)).is_ppt);

  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const ComplexMatrix p = kron(random_density_matrix(2, rng), random_density_matrix(3, rng));
    CHECK(ppt_check(DensityMatrix::create(p, {2, 3})).is_ppt);
  }
}

TEST_CASE("decide_separability verdicts and certificates") {
  CHECK(decide_separability(paper_state(PaperMatrix::RhoKU)).status == Separability::Entangled);
  CHECK(decide_separability(paper_state(PaperMatrix::RhoU)).status == Separability::Separable);
  CHECK(decide_separability(tracial(3, 3)).status == Separability::PptUndecided);
  CHECK(decide_separability(tracial(1, 5)).status == Separability::Separable);

  Rng rng(32);
  for (int t = 0; t < 50; ++t) {
    const DensityMatrix rho = random_state({2, 3}, rng);
    const Verdict v = decide_separability(rho);
    if (v.status != Separability::Entangled) continue;
    REQUIRE(v.negative.has_value());
    REQUIRE(v.witness.has_value());
    CHECK(v.negative->eigenvalue < 0);
    CHECK(witness_eval(rho, *v.witness) == doctest::Approx(v.negative->eigenvalue).epsilon(1e-10));
  }
}

TEST_CASE("singlet witness overlap") {
  const ComplexMatrix ss = kron(pauli::x(), pauli::x()) + kron(pauli::y(), pauli::y()) + kron(pauli::z(), pauli::z());
  const ComplexMatrix id = ComplexMatrix::identity(4);
  const auto rho = DensityMatrix::create((id - ss) * 0.25, {2, 2});
  CHECK(witness_eval(rho, Witness::create((id + ss) * 0.25)) == -0.5);
}

TEST_CASE("splitted witness identity Tr(rho A) = 1 - d beta") {
  Rng rng(33);
  for (std::size_t d : {2u, 3u, 4u}) {
    for (double beta : {0.0, 0.2, 1.0 / static_cast<double>(d), 0.6, 1.0}) {
      DensityMatrix pi = tracial(d, d);
      const DensityMatrix rho = splitted(d, beta, rng, pi);
      const Witness a = splitted_witness(pi, d);
      CHECK(std::abs(witness_eval(rho, a) - (1.0 - static_cast<double>(d) * beta)) < 1e-12);
    }
  }
  DensityMatrix pi = tracial(2, 2);
  const DensityMatrix rho = splitted(2, 0.6, rng, pi);
  CHECK(witness_eval(rho, splitted_witness(pi, 2)) == doctest::Approx(-0.2));
  CHECK(witness_eval(pi, splitted_witness(pi, 2)) == doctest::Approx(-1.0));
}

TEST_CASE("splitted witness on product states is 1 - |<phi*|psi>|^2") {
  const DensityMatrix pi = bell_state(BellLabel::PhiPlus).density();
  const Witness a = splitted_witness(pi, 2);
  Rng rng(34);
  for (int t = 0; t < 100; ++t) {
    const Vector phi = random_pure_vector(2, rng), psi = random_pure_vector(2, rng);
    const Vector ab = kron(phi, psi);
    const double v = inner(ab, a.matrix() * ab).real();
    Vector phic{std::conj(phi[0]), std::conj(phi[1])};
    CHECK(std::abs(v - (1.0 - std::norm(inner(phic, psi)))) < 1e-12);
    CHECK(v >= -1e-12);
  }
  // optimal: phi* = psi gives zero
  const Vector zero = kron(Vector{1, 0}, Vector{1, 0});
  CHECK(std::abs(inner(zero, a.matrix() * zero)) < 1e-15);
}

TEST_CASE("splitted witness rejects non maximally entangled projectors") {
  CHECK_THROWS_AS(splitted_witness(tracial(2, 2), 2), std::invalid_argument);
  const auto prod = DensityMatrix::create(ComplexMatrix::projector(Vector{1, 0, 0, 0}), {2, 2});
  CHECK_THROWS_AS(splitted_witness(prod, 2), std::invalid_argument);
}

TEST_CASE("product-state oracle beats brute force sampling") {
  Rng rng(35);
  for (Dims dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 3}}) {
    const ComplexMatrix m = random_hermitian(dims.total(), rng);
    const auto best = max_product_expectation(m, dims, rng);
    const double sampled = -kernels::min_product_expectation_serial(-1.0 * m, dims, 20000, 5);
    CHECK(best.value >= sampled - 1e-12);
    CHECK(best.value <= eigenvalues(m).front() + 1e-12);
    CHECK(std::abs(inner(kron(best.a, best.b), m * kron(best.a, best.b)).real() - best.value) < 1e-10);
  }
}

TEST_CASE("nearest separable: separable input returns itself") {
  const DensityMatrix rho = paper_state(PaperMatrix::RhoKV);
  const auto ns = nearest_separable(rho);
  CHECK(ns.distance == 0.0);
  CHECK(ns.converged);
  CHECK(max_abs_diff(ns.rho0.matrix(), rho.matrix()) == 0.0);
}

TEST_CASE("nearest separable: Bell state sits 1/sqrt(3) from the octahedron") {
  const DensityMatrix phi = bell_state(BellLabel::PhiPlus).density();
  const auto ns = nearest_separable(phi);
  CHECK(ns.converged);
  CHECK(ns.distance == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-9));
  // Bell-diagonal with c = (1/3, -1/3, 1/3)
  const auto c = correlation_coefficients(ns.rho0);
  CHECK(max_diff({c[0], c[1], c[2]}, {1.0 / 3, -1.0 / 3, 1.0 / 3}) < 1e-8);
  const Witness e = optimal_witness(phi, ns.rho0);
  CHECK(witness_eval(phi, e) == doctest::Approx(-ns.distance).epsilon(1e-10));
  CHECK(std::abs(witness_eval(ns.rho0, e)) < 1e-12);
}

TEST_CASE("nearest separable distances agree with an SDP oracle") {
  // Nearest PPT state by conic programming (cvxpy), frozen here.
  const auto ku = nearest_separable(paper_state(PaperMatrix::RhoKU));
  CHECK(std::abs(ku.distance - 0.1195731554) < 1e-7);
  CHECK(ku.converged);

  Vector w(6);
  w[0] = w[4] = 1 / std::sqrt(2.0);
  const auto rho = DensityMatrix::create(0.7 * ComplexMatrix::projector(w) + ComplexMatrix::identity(6) * (0.3 / 6), {2, 3});
  const auto ns = nearest_separable(rho);
  CHECK(std::abs(ns.distance - 0.3291402944) < 1e-7);
  CHECK(decide_separability(ns.rho0).status == Separability::Separable);
}

TEST_CASE("nearest separable distance shrinks as beta approaches 1/d") {
  Vector phi{1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0)};
  double last = INFINITY;
  for (double beta : {0.9, 0.75, 0.6, 0.55, 0.51, 0.501}) {
    const ComplexMatrix w = beta * ComplexMatrix::projector(phi) + (1 - beta) / 3.0 * (ComplexMatrix::identity(4) - ComplexMatrix::projector(phi));
    const double dist = nearest_separable(DensityMatrix::create(w, {2, 2})).distance;
    CHECK(dist > 0.0);
    CHECK(dist < last);
    last = dist;
  }
  CHECK(last < 2e-3);
}

TEST_CASE("conditional gradient: monotone history, approaches the projection") {
  const DensityMatrix phi = bell_state(BellLabel::PhiPlus).density();
  Tolerances tol;
  tol.fw_max_iter = 60;
  const auto cg = nearest_separable_cg(phi, 1, tol);
  for (std::size_t i = 1; i < cg.history.size(); ++i) CHECK(cg.history[i] <= cg.history[i - 1] + 1e-12);
  CHECK(std::abs(cg.distance - 1 / std::sqrt(3.0)) < 1e-4);
  CHECK(cg.gap >= -1e-12);
  double total = 0.0;
  for (double x : cg.weights) total += x;
  CHECK(total == doctest::Approx(1.0));
}

TEST_CASE("conditional gradient in 3x3 gives a witness for an NPT state") {
  Vector phi(9);
  for (std::size_t i = 0; i < 3; ++i) phi[i * 3 + i] = 1 / std::sqrt(3.0);
  const auto rho = DensityMatrix::create(0.8 * ComplexMatrix::projector(phi) + ComplexMatrix::identity(9) * (0.2 / 9), {3, 3});
  Tolerances tol;
  tol.fw_max_iter = 150;
  const auto ns = nearest_separable(rho, 2, tol);
  CHECK(ns.distance > 0.1);
  const Witness e = optimal_witness(rho, ns.rho0);
  CHECK(witness_eval(rho, e) < 0);
  const double floor = -ns.gap / ns.distance;
  CHECK(kernels::min_product_expectation_serial(e.matrix(), {3, 3}, 2000, 3) >= floor - 1e-12);
}

TEST_CASE("optimal witness needs distinct states") {
  const DensityMatrix r = tracial(2, 2);
  CHECK_THROWS_AS(optimal_witness(r, r), std::invalid_argument);
}

TEST_CASE("KZ ball membership") {
  CHECK(kz_radius(4) == doctest::Approx(1 / std::sqrt(12.0)).epsilon(1e-15));
  CHECK_FALSE(kz_ball_member(paper_state(PaperMatrix::RhoU)));
  CHECK(kz_ball_member(paper_state(PaperMatrix::RhoV)));
  CHECK(kz_ball_member(tracial(3, 3)));
}

TEST_CASE("two-qubit lemma values") {
  CHECK(two_qubit_lemma_value(paper_state(PaperMatrix::RhoU)) == doctest::Approx(0.5));
  CHECK(two_qubit_lemma_value(paper_state(PaperMatrix::RhoV)) == doctest::Approx((1 - std::sqrt(3.0)) / 4));
  CHECK(two_qubit_lemma_value(tracial(2, 2)) == doctest::Approx(-0.5));
  CHECK_FALSE(absolutely_separable_2q(paper_state(PaperMatrix::RhoU)));
  CHECK(absolutely_separable_2q(paper_state(PaperMatrix::RhoV)));
  CHECK_THROWS_AS(two_qubit_lemma_value(tracial(2, 3)), DimensionError);
}

TEST_CASE("KZ states and lemma states survive random global unitaries") {
  Rng rng(36);
  for (Dims dims : {Dims{2, 2}, Dims{2, 3}}) {
    const std::size_t n = dims.total();
    for (int t = 0; t < 10; ++t) {
      ComplexMatrix h = random_hermitian(n, rng);
      h -= ComplexMatrix::identity(n) * (h.trace() / static_cast<double>(n));
      const double r = kz_radius(n) * rng.uniform();
      const auto rho = DensityMatrix::create(ComplexMatrix::identity(n) * (1.0 / n) + h * (r / hs_norm(h)), dims);
      REQUIRE(kz_ball_member(rho));
      CHECK(kernels::ppt_survival_serial(rho, 20, t).failures == 0);
    }
  }
  int done = 0;
  while (done < 10) {
    auto p = random_simplex(4, rng);
    std::sort(p.begin(), p.end(), std::greater<>());
    const ComplexMatrix u = random_unitary(4, rng);
    const auto rho = DensityMatrix::create(u * ComplexMatrix::diagonal(p) * u.adjoint(), {2, 2});
    if (!absolutely_separable_2q(rho)) continue;
    CHECK(kernels::ppt_survival_serial(rho, 20, done).failures == 0);
    ++done;
  }
}
