#pragma once

#include <cstdint>
#include <optional>

#include "qfact/states.hpp"

namespace qfact::teleport {

/// Maximally entangled state of C^d (x) C^d together with the basis pairing
/// J_AB it defines: |phi> = d^{-1/2} sum_i |i> (x) J_AB |i>.
class ResourceState {
 public:
  /// Throws InvalidStateError naming the offending Schmidt coefficient.
  static ResourceState create(PureState state, const Tolerances& tol = default_tolerances());
  static ResourceState bell(BellLabel label);
  /// d^{-1/2} sum_i |i> (x) j |i>; j defaults to the identity.
  static ResourceState maximally_entangled(std::size_t d, const std::optional<ComplexMatrix>& j = std::nullopt);

  const PureState& state() const { return state_; }
  const ComplexMatrix& isometry_ab() const { return j_ab_; }
  std::size_t d() const { return j_ab_.dim(); }

 private:
  ResourceState(PureState s, ComplexMatrix j) : state_(std::move(s)), j_ab_(std::move(j)) {}
  PureState state_;
  ComplexMatrix j_ab_;
};

/// Index of the measured maximally entangled basis state on C (x) A.
/// For qubits the order is phi+, phi-, psi+, psi- (= BellLabel values).
struct ClassicalMessage {
  std::size_t outcome = 0;
  std::size_t d = 2;

  static std::size_t bit_count(std::size_t d);  // ceil(log2 d^2)
  std::vector<bool> bits() const;               // most significant first
  static ClassicalMessage from_bits(const std::vector<bool>& bits, std::size_t d);
};

/// Generalized Pauli X^p Z^q with outcome = p d + q; for d = 2 these label the Bell basis.
ComplexMatrix measurement_unitary(std::size_t outcome, std::size_t d);
/// d^{-1/2} sum_i |i>_C (x) U_m |i>_A.
Vector measurement_state(std::size_t outcome, std::size_t d);
/// The C -> A transfer induced by projecting onto outcome m: conj(U_m).
ComplexMatrix transfer_ca(std::size_t outcome, std::size_t d);

/// J_AB o J_CA, i.e. the matrix product jab * jca. Throws on non-unitary or mismatched inputs.
ComplexMatrix compose_isometries(const ComplexMatrix& jab, const ComplexMatrix& jca);

struct BellTerm {
  std::size_t outcome = 0;
  Vector bob_state;   // unit norm, phase fixed so the image of |0> has a positive leading entry
  cplx amplitude;     // psi (x) resource = sum amplitude |beta_outcome> (x) bob_state
};

/// Expands |psi>_C (x) |resource>_AB over the measurement basis on C (x) A (any d).
std::vector<BellTerm> decompose(const PureState& psi, const ResourceState& resource);
/// Qubit case; throws DimensionError unless the resource is 2x2.
std::vector<BellTerm> decompose_over_bell(const PureState& psi, const ResourceState& resource);

/// Unitary Bob applies after learning the outcome: (J_AB o J_CA)^dagger.
ComplexMatrix correction_for(const ClassicalMessage& outcome, const ResourceState& resource);

/// Joint C (x) A (x) B register, row-major with B fastest.
struct Register {
  Vector amplitudes;
  std::size_t d = 2;
};

struct OutcomeSelector {
  std::optional<std::size_t> forced;  // deterministic outcome
  std::uint64_t seed = 0;             // used when not forced
};

class Alice {
 public:
  Alice(PureState input, const ResourceState& resource);
  Register prepare() const;
  std::vector<double> outcome_probabilities(const Register& reg) const;
  /// Projective measurement on C (x) A; collapses reg and returns the message for Bob.
  ClassicalMessage measure(Register& reg, const OutcomeSelector& selector) const;
  std::size_t d() const { return d_; }

 private:
  PureState input_;
  Vector resource_;
  std::size_t d_;
};

class Bob {
 public:
  enum class Stage { Waiting, Holding, Corrected };
  explicit Bob(ResourceState resource) : resource_(std::move(resource)) {}

  /// Reads B out of a register whose C (x) A part has been collapsed.
  void hold(const Register& reg);
  void receive(const ClassicalMessage& msg);
  const Vector& state() const { return state_; }
  const ComplexMatrix& last_correction() const { return correction_; }
  Stage stage() const { return stage_; }

 private:
  ResourceState resource_;
  Vector state_;
  ComplexMatrix correction_;
  Stage stage_ = Stage::Waiting;
};

struct ProtocolTrace {
  PureState input;
  ClassicalMessage outcome;
  double outcome_probability = 0.0;
  Vector bob_state_before;
  ComplexMatrix correction;
  Vector bob_state_after;
  double fidelity = 0.0;
};

/// Runs Alice and Bob end to end. psi must have dims (d, 1) matching the resource.
ProtocolTrace run_protocol(const PureState& psi, const ResourceState& resource, const OutcomeSelector& selector);

/// Bob's reduced state before any message: Tr_{CA} |Psi><Psi|.
ComplexMatrix bob_marginal(const PureState& psi, const ResourceState& resource);

}  // namespace qfact::teleport
