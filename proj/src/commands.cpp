#include "qfact/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>

#include "qfact/criteria.hpp"
#include "qfact/kernels.hpp"
#include "qfact/random.hpp"

namespace qfact::cli {

void apply_tol_override(Tolerances& tol, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw std::invalid_argument("tolerance override must be NAME=VALUE: " + assignment);
  const std::string name = assignment.substr(0, eq), value = assignment.substr(eq + 1);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw std::invalid_argument("tolerance override: bad number '" + value + "'");
  tol.set(name, v);
}

namespace {

json real_array(const std::vector<double>& v) { return json(v); }

std::string verdict_name(Separability s) { return to_string(s); }

}  // namespace

json cmd_analyze(const io::StateFile& input, const RunConfig& cfg) {
  const DensityMatrix rho = input.density(cfg.tol);
  const std::size_t d = rho.dim();
  const auto spectrum = eigenvalues(rho.matrix(), cfg.tol);
  const PptResult ppt = ppt_check(rho, cfg.tol);
  const Verdict verdict = decide_separability(rho, cfg.tol);
  const ComplexMatrix centre = ComplexMatrix::identity(d) * (1.0 / static_cast<double>(d));

  json r;
  r["dims"] = {rho.dims().d1, rho.dims().d2};
  if (input.label) r["label"] = *input.label;
  r["trace"] = rho.matrix().trace().real();
  r["spectrum"] = real_array(spectrum);
  r["purity"] = purity(rho);
  r["pure"] = is_pure(rho);
  r["ppt"] = {{"is_ppt", ppt.is_ppt},
              {"min_eigenvalue", ppt.min_eigenvalue},
              {"min_eigenvector", io::to_json(ppt.min_eigenvector)}};
  r["separability"] = verdict_name(verdict.status);
  r["hs_distance_to_tracial"] = hs_distance(rho.matrix(), centre);
  r["kz_radius"] = kz_radius(d);
  r["kz_member"] = kz_ball_member(rho, cfg.tol);
  if (rho.dims() == Dims{2, 2}) {
    r["lemma_value"] = two_qubit_lemma_value(rho);
    r["absolutely_separable"] = absolutely_separable_2q(rho);
  }
  return r;
}

json cmd_tailor(const TailorRequest& req, const RunConfig& cfg) {
  const PureState psi = req.psi.state(cfg.tol);
  if (psi.dim() != req.k * req.l)
    throw DimensionError("tailor: state has " + std::to_string(psi.dim()) + " amplitudes, k*l = " +
                         std::to_string(req.k * req.l));
  const TailoredObservables t =
      req.unitary ? tailor_with_unitary(psi.amplitudes(), req.k, req.l, req.lambdas, *req.unitary, cfg.tol)
                  : tailor(psi.amplitudes(), req.k, req.l, req.lambdas, cfg.tol);

  // Self-checks: Schmidt coefficients in the new split, commutation, generated algebra.
  const SchmidtForm sf = schmidt_decompose(t.factorization.to_model(psi.amplitudes()), {req.k, req.l});
  std::vector<double> want;
  for (const cplx& z : req.lambdas) want.push_back(std::abs(z));
  std::sort(want.begin(), want.end(), std::greater<>());
  double schmidt_err = 0.0;
  for (std::size_t i = 0; i < want.size(); ++i) schmidt_err = std::max(schmidt_err, std::abs(sf.coefficients[i] - want[i]));
  double comm = 0.0;
  for (const auto& a : t.generators_a)
    for (const auto& b : t.generators_b) comm = std::max(comm, commutator(a, b).max_abs());
  std::vector<ComplexMatrix> gens(t.generators_a.begin(), t.generators_a.end());
  gens.insert(gens.end(), t.generators_b.begin(), t.generators_b.end());
  const std::size_t span = algebra_span_dim(gens, cfg.tol);

  json r = io::to_json(t);
  r["checks"] = {{"schmidt_coefficients", real_array(sf.coefficients)},
                 {"schmidt_max_error", schmidt_err},
                 {"max_commutator", comm},
                 {"algebra_span_dim", span},
                 {"expected_span_dim", req.k * req.k * req.l * req.l}};
  return r;
}

json cmd_witness(const io::StateFile& input, const RunConfig& cfg, std::size_t product_samples) {
  const DensityMatrix rho = input.density(cfg.tol);
  const Verdict verdict = decide_separability(rho, cfg.tol);
  json r;
  r["dims"] = {rho.dims().d1, rho.dims().d2};
  r["seed"] = cfg.seed;
  r["separability"] = verdict_name(verdict.status);
  if (verdict.status == Separability::Separable) {
    r["witness"] = nullptr;
    r["distance"] = 0.0;
    r["converged"] = true;
    r["message"] = "no witness: state separable (distance 0)";
    return r;
  }
  const NearestSeparable ns = nearest_separable(rho, cfg.seed, cfg.tol);
  r["distance"] = ns.distance;
  r["converged"] = ns.converged;
  r["iterations"] = ns.iterations;
  r["gap"] = ns.gap;
  r["rho0"] = io::to_json(ns.rho0.matrix());
  if (ns.distance <= 1e-12) {
    r["witness"] = nullptr;
    r["message"] = "no witness: state separable (distance 0)";
    return r;
  }
  const Witness w = optimal_witness(rho, ns.rho0);
  r["witness"] = io::to_json(w.matrix());
  r["expectations"] = {
      {"rho", witness_eval(rho, w)},
      {"rho0", witness_eval(ns.rho0, w)},
      {"product_min", kernels::min_product_expectation_parallel(w.matrix(), rho.dims(), product_samples, cfg.seed)},
      {"product_samples", product_samples}};
  return r;
}

namespace {

PureState teleport_input(const std::string& name, std::size_t d, std::uint64_t seed) {
  const double s = 1.0 / std::sqrt(2.0);
  if (d == 2) {
    if (name == "up") return PureState::create({1.0, 0.0}, {2, 1});
    if (name == "down") return PureState::create({0.0, 1.0}, {2, 1});
    if (name == "plus") return PureState::create({s, s}, {2, 1});
    if (name == "minus") return PureState::create({s, -s}, {2, 1});
  }
  if (name == "random") {
    Rng rng(seed);
    return PureState::create(random_pure_vector(d, rng), {d, 1});
  }
  if (!std::filesystem::exists(name)) throw std::invalid_argument("unknown input state '" + name + "'");
  return io::pure_state_file_from_json(io::read_json(name)).state();
}

teleport::ResourceState teleport_resource(const std::string& name, std::size_t d) {
  if (name == "maximal") return teleport::ResourceState::maximally_entangled(d);
  if (!std::filesystem::exists(name)) return teleport::ResourceState::bell(parse_bell_label(name));
  return teleport::ResourceState::create(io::pure_state_file_from_json(io::read_json(name)).state());
}

json trace_json(const teleport::ProtocolTrace& t) {
  std::string bits;
  for (bool b : t.outcome.bits()) bits += b ? '1' : '0';
  json j = {{"outcome", t.outcome.outcome},
            {"bits", bits},
            {"probability", t.outcome_probability},
            {"bob_state_before", io::to_json(t.bob_state_before)},
            {"correction", io::to_json(t.correction)},
            {"bob_state_after", io::to_json(t.bob_state_after)},
            {"fidelity", t.fidelity}};
  if (t.outcome.d == 2) j["bell"] = to_string(static_cast<BellLabel>(t.outcome.outcome));
  return j;
}

}  // namespace

json cmd_teleport(const TeleportRequest& req, const RunConfig& cfg) {
  const teleport::ResourceState resource = teleport_resource(req.resource, req.dim);
  const std::size_t d = resource.d();
  const PureState psi = teleport_input(req.input, d, cfg.seed);
  if (psi.dim() != d)
    throw DimensionError("input state has dimension " + std::to_string(psi.dim()) + ", resource needs " +
                         std::to_string(d));
  json r;
  r["seed"] = cfg.seed;
  r["d"] = d;
  r["input"] = io::to_json(psi.amplitudes());
  r["bob_marginal_before_message"] = io::to_json(teleport::bob_marginal(psi, resource));
  json traces = json::array();
  if (req.all_outcomes) {
    for (std::size_t m = 0; m < d * d; ++m) traces.push_back(trace_json(teleport::run_protocol(psi, resource, {m, 0})));
  } else {
    traces.push_back(trace_json(teleport::run_protocol(psi, resource, {std::nullopt, cfg.seed})));
  }
  r["traces"] = traces;
  return r;
}

json cmd_geometry_point(const geometry::CVector& c, const RunConfig& cfg) {
  const auto ev = geometry::eigenvalues_of_c(c);
  return {{"c", {c[0], c[1], c[2]}},
          {"eigenvalues", {ev[0], ev[1], ev[2], ev[3]}},
          {"label", geometry::to_string(geometry::classify(c, cfg.tol))}};
}

json geometry_summary(const geometry::RegionSample& s) {
  json counts;
  for (auto l : {geometry::RegionLabel::Unphysical, geometry::RegionLabel::EntangledTetra,
                 geometry::RegionLabel::SeparablePyramid, geometry::RegionLabel::KzBall})
    counts[geometry::to_string(l)] = s.count(l);
  return {{"resolution", s.resolution},
          {"points", s.labels.size()},
          {"counts", counts},
          {"separable_fraction_of_physical", s.separable_fraction()}};
}

}  // namespace qfact::cli
