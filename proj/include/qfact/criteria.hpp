#pragma once

#include <cstdint>
#include <optional>

#include "qfact/random.hpp"
#include "qfact/states.hpp"

namespace qfact {

/// Hermitian operator E with Tr(rho_sep E) >= 0 on separable states.
class Witness {
 public:
  static Witness create(ComplexMatrix e, const Tolerances& tol = default_tolerances());
  const ComplexMatrix& matrix() const { return e_; }

 private:
  explicit Witness(ComplexMatrix e) : e_(std::move(e)) {}
  ComplexMatrix e_;
};

struct PptResult {
  bool is_ppt = true;
  double min_eigenvalue = 0.0;
  Vector min_eigenvector;  // of the partial transpose on B
};

/// Positive-partial-transpose test (on B; the spectrum is the same on A).
PptResult ppt_check(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

enum class Separability { Entangled, Separable, PptUndecided };
std::string to_string(Separability s);

struct NegativeEigenvalue {
  double eigenvalue = 0.0;
  Vector eigenvector;
};

struct Verdict {
  Separability status = Separability::PptUndecided;
  std::optional<NegativeEigenvalue> negative;  // set when PT certifies entanglement
  std::optional<Witness> witness;
};

/// PPT is necessary for separability everywhere and sufficient in 2x2, 2x3 and 3x2.
/// Splits with a trivial factor are always separable.
Verdict decide_separability(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

/// Tr(rho E).
double witness_eval(const DensityMatrix& rho, const Witness& w);
double witness_eval(const ComplexMatrix& rho, const Witness& w);

/// I - d pi for a projector pi onto a maximally entangled state of C^d (x) C^d.
/// Throws std::invalid_argument when pi is not such a projector.
Witness splitted_witness(const DensityMatrix& pi, std::size_t d, const Tolerances& tol = default_tolerances());

/// Product vector a (x) b maximizing <a b| m |a b>, found by alternating
/// top-eigenvector updates from several random starts.
struct ProductMaximum {
  Vector a;
  Vector b;
  double value = 0.0;
};
ProductMaximum max_product_expectation(const ComplexMatrix& m, Dims dims, Rng& rng,
                                       const Tolerances& tol = default_tolerances(),
                                       const std::vector<Vector>& warm_starts = {});

struct NearestSeparable {
  DensityMatrix rho0;
  double distance = 0.0;
  bool converged = false;
  int iterations = 0;
  double gap = 0.0;               // max over product s of <rho - rho0, s - rho0>
  std::vector<double> history;    // distance per iteration, nonincreasing
  std::vector<Vector> atoms;      // product vectors with positive weight
  std::vector<double> weights;
};

/// Separable state closest to rho in Hilbert-Schmidt distance.
/// In 2x2 / 2x3 this is the nearest PPT state, found by alternating projections;
/// `atoms` stay empty there. Otherwise a fully corrective conditional-gradient
/// search over product vectors runs until the duality gap drops below
/// tol.fw_gap, or stops at tol.fw_max_iter with converged = false.
/// `gap` is always certified by the product-state oracle.
NearestSeparable nearest_separable(const DensityMatrix& rho, std::uint64_t seed = 0,
                                   const Tolerances& tol = default_tolerances());

/// The conditional-gradient search alone (any split); used by nearest_separable
/// outside 2x2 / 2x3.
NearestSeparable nearest_separable_cg(const DensityMatrix& rho, std::uint64_t seed = 0,
                                      const Tolerances& tol = default_tolerances());

/// (rho0 - rho_e - <rho0|rho0 - rho_e> I) / ||rho0 - rho_e||.
/// Throws std::invalid_argument when rho0 == rho_ent.
Witness optimal_witness(const DensityMatrix& rho_ent, const DensityMatrix& rho0);

/// 1 / sqrt(D (D - 1)).
double kz_radius(std::size_t total_dim);
bool kz_ball_member(const DensityMatrix& rho, const Tolerances& tol = default_tolerances());

/// rho1 - rho3 - 2 sqrt(rho2 rho4) over the descending spectrum of a two-qubit state.
double two_qubit_lemma_value(const DensityMatrix& rho);
/// Sufficient test for separability under every global unitary (two qubits only).
bool absolutely_separable_2q(const DensityMatrix& rho);

}  // namespace qfact
