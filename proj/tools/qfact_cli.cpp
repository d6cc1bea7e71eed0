#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qfact/commands.hpp"
#include "qfact/golden.hpp"

using namespace qfact;
using qfact::cli::json;

namespace {

constexpr int kExitInvalidInput = 2;
constexpr int kExitNoConvergence = 3;

struct Common {
  std::string input;
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::vector<std::string> tol_overrides;
};

cli::RunConfig config_from(const Common& c) {
  cli::RunConfig cfg;
  cfg.seed = c.seed;
  for (const auto& a : c.tol_overrides) cli::apply_tol_override(cfg.tol, a);
  return cfg;
}

void add_common(CLI::App* sub, Common& c, bool needs_input) {
  auto* in = sub->add_option("--input,-i", c.input, "input JSON file");
  if (needs_input) in->required();
  sub->add_option("--output,-o", c.output, "output path (default stdout)");
  sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--seed", c.seed, "random seed (default 0)");
  sub->add_option("--tol-override", c.tol_overrides, "NAME=VALUE, repeatable");
}

void emit(const Common& c, const json& report) { io::write_text(c.output, report.dump(2) + "\n"); }

ComplexMatrix read_matrix_file(const std::string& path) {
  json j = io::read_json(path);
  if (j.is_object() && j.contains("matrix")) return io::matrix_from_json(j["matrix"]);
  if (j.is_object() && j.contains("unitary")) return io::matrix_from_json(j["unitary"]);
  return io::matrix_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qfact: bipartite entanglement toolkit"};
  app.require_subcommand(1);

  Common analyze_opts, tailor_opts, witness_opts, teleport_opts, geometry_opts, golden_opts;

  auto* analyze = app.add_subcommand("analyze", "spectrum, PPT, separability and KZ report for a state file");
  add_common(analyze, analyze_opts, true);

  auto* tailor = app.add_subcommand("tailor", "build observables that give a pure state chosen Schmidt coefficients");
  add_common(tailor, tailor_opts, true);
  std::size_t k = 2, l = 2;
  std::vector<double> lambdas;
  std::string unitary_path;
  tailor->add_option("--k", k, "dimension of the first factor");
  tailor->add_option("--l", l, "dimension of the second factor");
  tailor->add_option("--lambdas", lambdas, "real Schmidt coefficients, min(k, l) of them")->required();
  tailor->add_option("--unitary", unitary_path, "JSON matrix file overriding the constructed unitary");

  auto* witness = app.add_subcommand("witness", "nearest separable state and optimal witness");
  add_common(witness, witness_opts, true);
  std::size_t samples = 10000;
  witness->add_option("--product-samples", samples, "random product states used to probe the witness");

  auto* teleport_cmd = app.add_subcommand("teleport", "simulate teleportation through a maximally entangled resource");
  add_common(teleport_cmd, teleport_opts, false);
  cli::TeleportRequest treq;
  std::string outcome = "all";
  teleport_cmd->add_option("--input-state", treq.input, "up, down, plus, minus, random, or a pure-state file");
  teleport_cmd->add_option("--resource", treq.resource, "phi+, phi-, psi+, psi-, maximal, or a pure-state file");
  teleport_cmd->add_option("--dim", treq.dim, "local dimension for --resource maximal");
  teleport_cmd->add_option("--outcome", outcome, "all or random")->check(CLI::IsMember({"all", "random"}));

  auto* geometry_cmd = app.add_subcommand("geometry", "classify Bell-diagonal states on a grid or at one point");
  add_common(geometry_cmd, geometry_opts, false);
  std::size_t resolution = 21;
  std::vector<double> point;
  bool summary_only = false;
  geometry_cmd->add_option("--resolution", resolution, "grid points per axis");
  geometry_cmd->add_option("--point", point, "single point cx cy cz")->expected(3);
  geometry_cmd->add_flag("--summary", summary_only, "print only counts per region");

  auto* golden = app.add_subcommand("paper-examples", "run the worked-example suite, one PASS/FAIL line per item");
  add_common(golden, golden_opts, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      auto cfg = config_from(analyze_opts);
      auto f = io::state_file_from_json(io::read_json(analyze_opts.input));
      json r = cli::cmd_analyze(f, cfg);
      r["seed"] = cfg.seed;
      emit(analyze_opts, r);
    } else if (*tailor) {
      auto cfg = config_from(tailor_opts);
      cli::TailorRequest req{io::pure_state_file_from_json(io::read_json(tailor_opts.input)), k, l, {}, std::nullopt};
      for (double x : lambdas) req.lambdas.emplace_back(x);
      if (!unitary_path.empty()) req.unitary = read_matrix_file(unitary_path);
      json r = cli::cmd_tailor(req, cfg);
      r["seed"] = cfg.seed;
      emit(tailor_opts, r);
    } else if (*witness) {
      auto cfg = config_from(witness_opts);
      auto f = io::state_file_from_json(io::read_json(witness_opts.input));
      json r = cli::cmd_witness(f, cfg, samples);
      emit(witness_opts, r);
      if (!r["converged"].get<bool>()) {
        std::cerr << "nearest separable search did not converge\n";
        return kExitNoConvergence;
      }
    } else if (*teleport_cmd) {
      auto cfg = config_from(teleport_opts);
      if (!teleport_opts.input.empty()) treq.input = teleport_opts.input;
      treq.all_outcomes = outcome == "all";
      emit(teleport_opts, cli::cmd_teleport(treq, cfg));
    } else if (*geometry_cmd) {
      auto cfg = config_from(geometry_opts);
      if (!point.empty()) {
        json r = cli::cmd_geometry_point({point[0], point[1], point[2]}, cfg);
        r["seed"] = cfg.seed;
        emit(geometry_opts, r);
        return 0;
      }
      auto s = geometry::sample_region(resolution, true, cfg.tol);
      json summary = cli::geometry_summary(s);
      summary["seed"] = cfg.seed;
      if (summary_only) {
        emit(geometry_opts, summary);
        return 0;
      }
      std::ostringstream os;
      if (geometry_opts.format == "csv") {
        geometry::write_csv(os, s);
      } else {
        geometry::write_json_lines(os, s);
      }
      io::write_text(geometry_opts.output, os.str());
      std::cerr << summary.dump() << "\n";
    } else if (*golden) {
      auto items = run_golden_suite();
      std::ostringstream os;
      std::size_t failed = 0;
      for (const auto& it : items) {
        failed += it.pass ? 0 : 1;
        char buf[64];
        std::snprintf(buf, sizeof buf, "error=%.3g tol=%.3g", it.error, it.tol);
        os << (it.pass ? "PASS " : "FAIL ") << it.name << ' ' << buf;
        if (!it.detail.empty()) os << ' ' << it.detail;
        os << '\n';
      }
      os << items.size() - failed << "/" << items.size() << " passed\n";
      io::write_text(golden_opts.output, os.str());
      return failed == 0 ? 0 : 1;
    }
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
