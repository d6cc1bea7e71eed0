#include "qfact/teleport.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qfact/factorization.hpp"
#include "qfact/random.hpp"

namespace qfact::teleport {

namespace {

void check_outcome(std::size_t outcome, std::size_t d) {
  if (outcome >= d * d)
    throw std::invalid_argument("outcome index " + std::to_string(outcome) + " out of range [0, " +
                                std::to_string(d * d) + ")");
}

// Decoding map J_AB conj(U_m); Bob's conditional state is (1/d) times its action on psi.
ComplexMatrix transfer_cb(std::size_t outcome, const ResourceState& r) {
  return compose_isometries(r.isometry_ab(), transfer_ca(outcome, r.d()));
}

// Phase of the leading entry of the image of |0>, used to split amplitude from state.
cplx leading_phase(const ComplexMatrix& t) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < t.dim(); ++i)
    if (std::abs(t(i, 0)) > std::abs(t(best, 0)) + 1e-12) best = i;
  return t(best, 0) / std::abs(t(best, 0));
}

// Index of (c, a, b) in the C (x) A (x) B register.
std::size_t reg_index(std::size_t c, std::size_t a, std::size_t b, std::size_t d) { return (c * d + a) * d + b; }

Vector conditional(const Vector& reg, std::size_t outcome, std::size_t d) {
  Vector beta = measurement_state(outcome, d);
  Vector out(d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) out[b] += std::conj(beta[c * d + a]) * reg[reg_index(c, a, b, d)];
  return out;
}

void check_input(const PureState& psi, const ResourceState& r) {
  if (psi.dims().d2 != 1 || psi.dim() != r.d())
    throw DimensionError("input state must have dims (" + std::to_string(r.d()) + ", 1), got (" +
                         std::to_string(psi.dims().d1) + ", " + std::to_string(psi.dims().d2) + ")");
}

}  // namespace

ResourceState ResourceState::create(PureState state, const Tolerances& tol) {
  Dims dims = state.dims();
  if (dims.d1 != dims.d2 || dims.d1 < 2)
    throw DimensionError("resource state must have dims (d, d) with d >= 2");
  const std::size_t d = dims.d1;
  SchmidtForm sf = schmidt_decompose(state);
  const double expected = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < sf.coefficients.size(); ++i) {
    if (std::abs(sf.coefficients[i] - expected) > tol.schmidt)
      throw InvalidStateError("resource state is not maximally entangled: Schmidt coefficient " + std::to_string(i) +
                              " = " + std::to_string(sf.coefficients[i]) + ", expected " + std::to_string(expected));
  }
  // |phi> = d^{-1/2} sum_i |i> J|i>  =>  J = sqrt(d) M^T with M the amplitude matrix.
  ComplexMatrix j(d);
  const double sd = std::sqrt(static_cast<double>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) j(b, a) = sd * state.amplitudes()[a * d + b];
  return ResourceState(std::move(state), std::move(j));
}

ResourceState ResourceState::bell(BellLabel label) { return create(bell_state(label)); }

ResourceState ResourceState::maximally_entangled(std::size_t d, const std::optional<ComplexMatrix>& j) {
  ComplexMatrix jj = j ? *j : ComplexMatrix::identity(d);
  if (jj.dim() != d) throw DimensionError("isometry dimension does not match d");
  if (!is_unitary(jj, default_tolerances().unitary)) throw InvalidStateError("resource isometry is not unitary");
  Vector amps(d * d);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) amps[a * d + b] = s * jj(b, a);
  return create(PureState::create(std::move(amps), {d, d}));
}

std::size_t ClassicalMessage::bit_count(std::size_t d) {
  std::size_t n = d * d, bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  return bits;
}

std::vector<bool> ClassicalMessage::bits() const {
  const std::size_t n = bit_count(d);
  std::vector<bool> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (outcome >> (n - 1 - i)) & 1U;
  return out;
}

ClassicalMessage ClassicalMessage::from_bits(const std::vector<bool>& bits, std::size_t d) {
  if (bits.size() != bit_count(d)) throw std::invalid_argument("wrong number of classical bits");
  std::size_t v = 0;
  for (bool b : bits) v = (v << 1) | (b ? 1U : 0U);
  check_outcome(v, d);
  return {v, d};
}

ComplexMatrix measurement_unitary(std::size_t outcome, std::size_t d) {
  check_outcome(outcome, d);
  const std::size_t p = outcome / d, q = outcome % d;
  ComplexMatrix u(d);
  for (std::size_t i = 0; i < d; ++i) {
    // X^p Z^q |i> = w^{q i} |i + p>, with exact values at w^0 and w^{d/2}
    const std::size_t k = (q * i) % d;
    cplx w = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));
    if (k == 0) w = 1.0;
    if (2 * k == d) w = -1.0;
    u((i + p) % d, i) = w;
  }
  return u;
}

Vector measurement_state(std::size_t outcome, std::size_t d) {
  ComplexMatrix u = measurement_unitary(outcome, d);
  Vector v(d * d);
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t a = 0; a < d; ++a) v[c * d + a] = s * u(a, c);
  return v;
}

ComplexMatrix transfer_ca(std::size_t outcome, std::size_t d) { return measurement_unitary(outcome, d).conj(); }

ComplexMatrix compose_isometries(const ComplexMatrix& jab, const ComplexMatrix& jca) {
  if (jab.dim() != jca.dim())
    throw DimensionError("isometries have different dimensions: " + std::to_string(jab.dim()) + " and " +
                         std::to_string(jca.dim()));
  const double tol = default_tolerances().unitary;
  if (!is_unitary(jab, tol) || !is_unitary(jca, tol)) throw std::invalid_argument("isometry is not unitary");
  return jab * jca;
}

std::vector<BellTerm> decompose(const PureState& psi, const ResourceState& resource) {
  check_input(psi, resource);
  const std::size_t d = resource.d();
  Vector reg = kron(psi.amplitudes(), resource.state().amplitudes());
  std::vector<BellTerm> terms;
  for (std::size_t m = 0; m < d * d; ++m) {
    Vector cond = conditional(reg, m, d);
    double n = norm(cond);
    cplx phase = leading_phase(transfer_cb(m, resource));
    BellTerm t;
    t.outcome = m;
    t.amplitude = phase * n;
    t.bob_state.resize(d);
    for (std::size_t b = 0; b < d; ++b) t.bob_state[b] = std::conj(phase) * cond[b] / n;
    terms.push_back(std::move(t));
  }
  return terms;
}

std::vector<BellTerm> decompose_over_bell(const PureState& psi, const ResourceState& resource) {
  if (resource.d() != 2) throw DimensionError("Bell decomposition needs a two-qubit resource");
  return decompose(psi, resource);
}

ComplexMatrix correction_for(const ClassicalMessage& outcome, const ResourceState& resource) {
  if (outcome.d != resource.d()) throw DimensionError("message dimension does not match resource");
  check_outcome(outcome.outcome, resource.d());
  return transfer_cb(outcome.outcome, resource).adjoint();
}

Alice::Alice(PureState input, const ResourceState& resource)
    : input_(std::move(input)), resource_(resource.state().amplitudes()), d_(resource.d()) {
  check_input(input_, resource);
}

Register Alice::prepare() const { return {kron(input_.amplitudes(), resource_), d_}; }

std::vector<double> Alice::outcome_probabilities(const Register& reg) const {
  std::vector<double> p(d_ * d_);
  for (std::size_t m = 0; m < p.size(); ++m) {
    double n = norm(conditional(reg.amplitudes, m, d_));
    p[m] = n * n;
  }
  return p;
}

ClassicalMessage Alice::measure(Register& reg, const OutcomeSelector& selector) const {
  std::vector<double> p = outcome_probabilities(reg);
  std::size_t m = 0;
  if (selector.forced) {
    m = *selector.forced;
    check_outcome(m, d_);
    if (p[m] <= 0.0) throw std::invalid_argument("forced outcome has zero probability");
  } else {
    Rng rng(selector.seed);
    double u = rng.uniform(), acc = 0.0;
    m = p.size() - 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
      acc += p[i];
      if (u < acc) {
        m = i;
        break;
      }
    }
  }
  // Collapse: |beta_m> (x) normalized conditional state.
  Vector cond = normalized(conditional(reg.amplitudes, m, d_));
  reg.amplitudes = kron(measurement_state(m, d_), cond);
  return {m, d_};
}

void Bob::hold(const Register& reg) {
  const std::size_t d = reg.d;
  if (d != resource_.d()) throw DimensionError("register dimension does not match resource");
  // After Alice's measurement the register is a product; read B from its heaviest slice.
  std::size_t best = 0;
  double best_norm = -1.0;
  for (std::size_t ca = 0; ca < d * d; ++ca) {
    double n = norm(std::span<const cplx>(reg.amplitudes).subspan(ca * d, d));
    if (n > best_norm) {
      best_norm = n;
      best = ca;
    }
  }
  state_ = normalized(std::span<const cplx>(reg.amplitudes).subspan(best * d, d));
  stage_ = Stage::Holding;
}

void Bob::receive(const ClassicalMessage& msg) {
  if (stage_ != Stage::Holding) throw std::logic_error("Bob has no qubit to correct");
  correction_ = correction_for(msg, resource_);
  state_ = correction_ * state_;
  stage_ = Stage::Corrected;
}

ProtocolTrace run_protocol(const PureState& psi, const ResourceState& resource, const OutcomeSelector& selector) {
  Alice alice(psi, resource);
  Bob bob(resource);
  Register reg = alice.prepare();
  std::vector<double> probs = alice.outcome_probabilities(reg);
  ClassicalMessage msg = alice.measure(reg, selector);
  bob.hold(reg);

  ProtocolTrace t{psi, msg, probs[msg.outcome], bob.state(), {}, {}, 0.0};
  // Only the value crosses over; Bob decodes it from the bits.
  bob.receive(ClassicalMessage::from_bits(msg.bits(), msg.d));
  t.correction = bob.last_correction();
  t.bob_state_after = bob.state();
  double ov = std::abs(inner(psi.amplitudes(), t.bob_state_after));
  t.fidelity = ov * ov;
  return t;
}

ComplexMatrix bob_marginal(const PureState& psi, const ResourceState& resource) {
  check_input(psi, resource);
  const std::size_t d = resource.d();
  Vector reg = kron(psi.amplitudes(), resource.state().amplitudes());
  return partial_trace(ComplexMatrix::projector(reg), {d * d, d}, Subsystem::B);
}

}  // namespace qfact::teleport
