#include "helpers.hpp"
#include "qfact/criteria.hpp"
#include "qfact/factorization.hpp"

using namespace qfact;
using namespace qfact::testing;

namespace {

DensityMatrix with_spectrum(std::vector<double> p, Dims dims, Rng& rng) {
  std::sort(p.begin(), p.end(), std::greater<>());
  const ComplexMatrix u = random_unitary(dims.total(), rng);
  return DensityMatrix::create(u * ComplexMatrix::diagonal(p) * u.adjoint(), dims);
}

double off_diagonal_mass(const ComplexMatrix& m) {
  double s = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      if (r != c) s += std::norm(m(r, c));
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("Schmidt decomposition examples") {
  const SchmidtForm bell = schmidt_decompose(bell_state(BellLabel::PhiPlus));
  CHECK(max_diff(bell.coefficients, {1 / std::sqrt(2.0), 1 / std::sqrt(2.0)}) < 1e-15);
  const SchmidtForm prod = schmidt_decompose(PureState::create({0, 1, 0, 0}, {2, 2}));
  CHECK(max_diff(prod.coefficients, {1, 0}) < 1e-15);
  CHECK(pure_is_factorized(PureState::create({0, 1, 0, 0}, {2, 2})));
  CHECK_FALSE(pure_is_factorized(bell_state(BellLabel::PsiMinus)));
}

TEST_CASE("Schmidt coefficients squared are the reduced spectrum; reconstruction") {
  Rng rng(21);
  for (Dims dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 3}, Dims{3, 2}}) {
    for (int t = 0; t < 30; ++t) {
      const PureState psi = PureState::create(random_pure_vector(dims.total(), rng), dims);
      const SchmidtForm sf = schmidt_decompose(psi);
      CHECK(phase_distance(sf.reconstruct(), psi.amplitudes()) < 1e-12);
      auto reduced = eigenvalues(partial_trace(psi.density().matrix(), dims, Subsystem::A));
      for (std::size_t i = 0; i < sf.coefficients.size(); ++i)
        CHECK(std::abs(sf.coefficients[i] * sf.coefficients[i] - reduced[i]) < 1e-12);
    }
  }
}

TEST_CASE("tailor postconditions over random draws") {
  Rng rng(22);
  for (auto [k, l] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 3}}) {
    for (int t = 0; t < 25; ++t) {
      const Vector psi = random_pure_vector(k * l, rng);
      Vector lambdas = random_pure_vector(std::min(k, l), rng);  // complex lambdas allowed
      const auto obs = tailor(psi, k, l, lambdas);
      const Vector model = obs.factorization.to_model(psi);
      CHECK(phase_distance(obs.factorization.unitary() * obs.model_state, psi) < 1e-10);
      const SchmidtForm sf = schmidt_decompose(model, {k, l});
      std::vector<double> want;
      for (const cplx& z : lambdas) want.push_back(std::abs(z));
      std::sort(want.begin(), want.end(), std::greater<>());
      CHECK(max_diff(sf.coefficients, want) < 1e-9);
      double comm = 0.0;
      for (const auto& a : obs.generators_a)
        for (const auto& b : obs.generators_b) comm = std::max(comm, commutator(a, b).max_abs());
      CHECK(comm < 1e-9);
      std::vector<ComplexMatrix> gens(obs.generators_a.begin(), obs.generators_a.end());
      gens.insert(gens.end(), obs.generators_b.begin(), obs.generators_b.end());
      CHECK(algebra_span_dim(gens) == k * k * l * l);
    }
  }
}

TEST_CASE("tailor with lambda = (1, 0) gives a product state") {
  const Vector psi{1, 0, 0, 0};
  const auto obs = tailor(psi, 2, 2, Vector{1, 0});
  CHECK(pure_is_factorized(PureState::create(obs.factorization.to_model(psi), {2, 2})));
}

TEST_CASE("tailor input errors") {
  CHECK_THROWS_AS(tailor(Vector{1, 0, 0}, 2, 2, Vector{1, 0}), DimensionError);
  CHECK_THROWS_AS(tailor(Vector{1, 0, 0, 0}, 2, 2, Vector{1, 1}), InvalidStateError);
  CHECK_THROWS_AS(tailor(Vector{1, 0, 0, 0}, 2, 2, Vector{1}), DimensionError);
  // Explicit unitary that does not send the model state to psi.
  CHECK_THROWS_AS(tailor_with_unitary(Vector{0, 1, 0, 0}, 2, 2, Vector{0.6, 0.8}, simple_tailor_unitary(0.6, 0.8)),
                  std::invalid_argument);
}

TEST_CASE("explicit 4x4 unitary satisfies the tailoring postconditions") {
  for (double l1 : {1.0, 0.8, 1 / std::sqrt(2.0), 0.3}) {
    const double l2 = std::sqrt(1 - l1 * l1);
    const ComplexMatrix u = simple_tailor_unitary(l1, l2);
    CHECK(is_unitary(u, 1e-14));
    const Vector psi = u * Vector{l1, 0, 0, l2};
    const auto obs = tailor_with_unitary(psi, 2, 2, Vector{l1, l2}, u);
    std::vector<ComplexMatrix> gens(obs.generators_a.begin(), obs.generators_a.end());
    gens.insert(gens.end(), obs.generators_b.begin(), obs.generators_b.end());
    CHECK(algebra_span_dim(gens) == 16);
  }
}

TEST_CASE("separating unitary diagonalizes into the product basis") {
  const Factorization f = separating_unitary(bell_state(BellLabel::PhiPlus).density(), {2, 2});
  const ComplexMatrix zeta = f.to_model(bell_state(BellLabel::PhiPlus).density().matrix());
  CHECK(max_abs_diff(zeta, ComplexMatrix::diagonal(std::vector<double>{1, 0, 0, 0})) < 1e-12);

  const DensityMatrix rho_u = paper_state(PaperMatrix::RhoU);
  const ComplexMatrix zu = separating_unitary(rho_u, {2, 2}).to_model(rho_u.matrix());
  CHECK(off_diagonal_mass(zu) < 1e-12);
  std::vector<double> diag;
  for (std::size_t i = 0; i < 4; ++i) diag.push_back(zu(i, i).real());
  std::sort(diag.begin(), diag.end(), std::greater<>());
  CHECK(max_diff(diag, {0.5, 0.5, 0, 0}) < 1e-12);

  const DensityMatrix d = DensityMatrix::create(ComplexMatrix::diagonal(std::vector<double>{0.1, 0.2, 0.3, 0.4}), {2, 2});
  CHECK(max_abs_diff(separating_unitary(d, {2, 2}).to_model(d.matrix()), d.matrix()) < 1e-15);
}

TEST_CASE("separating unitary output is PPT on random states") {
  Rng rng(23);
  for (Dims dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 3}}) {
    for (int t = 0; t < 30; ++t) {
      const DensityMatrix rho = random_state(dims, rng);
      const ComplexMatrix zeta = separating_unitary(rho, dims).to_model(rho.matrix());
      CHECK(off_diagonal_mass(zeta) < 1e-9);
      CHECK(ppt_check(DensityMatrix::create(0.5 * (zeta + zeta.adjoint()), dims)).is_ppt);
    }
  }
}

TEST_CASE("subspace entanglement: worked spectrum d = 2") {
  Rng rng(24);
  const DensityMatrix rho = with_spectrum({0.85, 0.10, 0.05, 0.0}, {2, 2}, rng);
  const auto r = subspace_entangle(rho);
  CHECK(r.entangled);
  const double e2m = 0.5 * (0.10 + 0.0) - std::sqrt(0.25 * 0.10 * 0.10 + 0.25 * (0.85 - 0.05) * (0.85 - 0.05));
  CHECK(r.e2_minus == doctest::Approx(e2m).epsilon(1e-12));
  CHECK(std::abs(r.min_pt_eigenvalue - e2m) < 1e-9);
  CHECK(is_unitary(r.k, 1e-12));
  CHECK(max_abs_diff(r.rho_k.matrix(), r.k * rho.matrix() * r.k.adjoint()) < 1e-12);
}

TEST_CASE("subspace entanglement: top eigenvector goes to a maximally entangled vector") {
  Rng rng(25);
  const DensityMatrix rho = with_spectrum({0.5, 0.2, 0.1, 0.1, 0.05, 0.03, 0.01, 0.01, 0.0}, {3, 3}, rng);
  const auto r = subspace_entangle(rho);
  const auto eig = hermitian_eig(rho.matrix());
  const Vector image = r.k * eig.eigenvectors.column(0);
  const double s = 1 / std::sqrt(2.0);
  Vector want(9);
  want[0] = s;
  want[4] = s;
  CHECK(phase_distance(image, want) < 1e-10);
  // K leaves eigenvectors outside V on product basis vectors.
  const Vector mid = r.k * eig.eigenvectors.column(1);
  double mx = 0.0;
  for (const cplx& z : mid) mx = std::max(mx, std::abs(z));
  CHECK(mx == doctest::Approx(1.0));
}

TEST_CASE("subspace entanglement: closed forms match the PT block spectrum") {
  Rng rng(26);
  for (std::size_t d : {2u, 3u}) {
    for (int t = 0; t < 60; ++t) {
      const DensityMatrix rho = with_spectrum(random_simplex(d * d, rng), {d, d}, rng);
      const auto r = subspace_entangle(rho);
      std::vector<double> want{r.e1, r.e1, r.e2_plus, r.e2_minus};
      std::sort(want.begin(), want.end(), std::greater<>());
      CHECK(max_diff(eigenvalues(r.block_pt), want) < 1e-9);
      const std::size_t n = d * d;
      if (r.spectrum[0] > 3.0 * r.spectrum[n - 3]) CHECK(r.e2_minus < 0.0);
      if (r.spectrum[0] > 3.0 / static_cast<double>(n)) CHECK(r.entangled);
    }
  }
}

TEST_CASE("subspace entanglement edge cases") {
  const auto t = subspace_entangle(tracial(2, 2));
  CHECK_FALSE(t.entangled);
  CHECK(is_unitary(t.k, 1e-12));
  Rng rng(27);
  CHECK_THROWS_AS(subspace_entangle(random_state({2, 3}, rng)), DimensionError);
}
