#include "helpers.hpp"
#include "qfact/io.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sys/wait.h>

using namespace qfact;
using io::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QFACT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_tmp(const std::string& name, const json& j) {
  const std::string path = std::string(QFACT_TEST_TMP) + "/" + name;
  std::ofstream(path) << j.dump();
  return path;
}

std::string state_path(PaperMatrix m, const std::string& name) {
  return write_tmp(name, io::to_json(io::state_file(paper_state(m), name)));
}

}  // namespace

TEST_CASE("analyze") {
  json u = json::parse(run("analyze --input " + state_path(PaperMatrix::RhoU, "rho_U.json")).out);
  CHECK(u["separability"] == "separable");
  CHECK(u["kz_member"] == false);
  CHECK(u["lemma_value"].get<double>() == doctest::Approx(0.5));
  CHECK(u["seed"] == 0);

  json ku = json::parse(run("analyze --input " + state_path(PaperMatrix::RhoKU, "rho_KU.json")).out);
  CHECK(ku["separability"] == "entangled");
  CHECK(ku["ppt"]["min_eigenvalue"].get<double>() == doctest::Approx((1 - std::sqrt(2.0)) / 4));

  const std::string t = write_tmp("tracial.json", io::to_json(io::state_file(tracial(2, 2))));
  json tr = json::parse(run("analyze --input " + t).out);
  CHECK(tr["kz_member"] == true);
  CHECK(tr["pure"] == false);
}

TEST_CASE("invalid input exits with code 2 and a diagnostic") {
  const std::string bad = write_tmp("bad.json", json::parse(R"({"dims":[2,1],"matrix":[[[1,0],[0,0]],[[0,0],[1,0]]]})"));
  CHECK(run("analyze --input " + bad).code == 2);
  CHECK(run("analyze --input /nonexistent.json").code == 2);
  CHECK(run("analyze --input " + bad + " --tol-override nope=1").code == 2);
  CHECK(run("teleport --input-state up --resource " +
            write_tmp("prod.json", json::parse(R"({"dims":[2,2],"amplitudes":[[1,0],[0,0],[0,0],[0,0]]})")))
            .code == 2);
}

TEST_CASE("witness") {
  json w = json::parse(run("witness --input " + state_path(PaperMatrix::RhoKU, "ku_w.json")).out);
  CHECK(w["expectations"]["rho"].get<double>() < 0);
  CHECK(std::abs(w["expectations"]["rho0"].get<double>()) < 1e-9);
  CHECK(w["expectations"]["product_min"].get<double>() > -1e-9);
  json s = json::parse(run("witness --input " + state_path(PaperMatrix::RhoU, "u_w.json")).out);
  CHECK(s["witness"].is_null());
  CHECK(s["message"] == "no witness: state separable (distance 0)");
}

TEST_CASE("non-convergence exits with code 3") {
  Vector phi(9);
  for (std::size_t i = 0; i < 3; ++i) phi[i * 3 + i] = 1 / std::sqrt(3.0);
  const auto rho = DensityMatrix::create(ComplexMatrix::projector(phi), {3, 3});
  const std::string p = write_tmp("max3.json", io::to_json(io::state_file(rho)));
  CHECK(run("witness --input " + p + " --tol-override fw_max_iter=2 --product-samples 10").code == 3);
}

TEST_CASE("teleport") {
  json all = json::parse(run("teleport --input-state random --seed 5 --outcome all").out);
  CHECK(all["seed"] == 5);
  REQUIRE(all["traces"].size() == 4);
  for (const auto& t : all["traces"]) CHECK(t["fidelity"].get<double>() == doctest::Approx(1.0));
  json up = json::parse(run("teleport --input-state up").out);
  for (const auto& t : up["traces"]) {
    const Vector after = io::vector_from_json(t["bob_state_after"]);
    CHECK(phase_distance(after, Vector{1, 0}) < 1e-12);
  }
  json q = json::parse(run("teleport --resource maximal --dim 3 --input-state random").out);
  CHECK(q["traces"].size() == 9);
}

TEST_CASE("tailor") {
  const std::string psi = write_tmp("psi4.json", json::parse(R"({"dims":[4,1],"amplitudes":[[1,0],[0,0],[0,0],[0,0]]})"));
  json r = json::parse(run("tailor --input " + psi + " --k 2 --l 2 --lambdas 0.6 0.8").out);
  CHECK(r["checks"]["algebra_span_dim"] == 16);
  CHECK(r["checks"]["schmidt_max_error"].get<double>() < 1e-9);
  json p = json::parse(run("tailor --input " + psi + " --lambdas 1 0").out);
  CHECK(p["checks"]["schmidt_coefficients"][1].get<double>() < 1e-12);
}

TEST_CASE("geometry") {
  json pt = json::parse(run("geometry --point 1 0 0").out);
  CHECK(pt["label"] == "SeparablePyramid");
  json s = json::parse(run("geometry --resolution 21 --summary").out);
  CHECK(s["counts"]["KzBall"].get<int>() > 0);
  json c = json::parse(run("geometry --resolution 2 --summary").out);
  CHECK(c["counts"]["EntangledTetra"] == 4);
  const Run csv = run("geometry --resolution 3 --format csv");
  CHECK(csv.out.rfind("cx,cy,cz,label\n", 0) == 0);
}

TEST_CASE("identical runs give identical bytes") {
  const std::string p = state_path(PaperMatrix::RhoKU, "ku_det.json");
  CHECK(run("witness --input " + p + " --seed 3").out == run("witness --input " + p + " --seed 3").out);
  CHECK(run("geometry --resolution 9 --format csv").out ==
        run("geometry --resolution 9 --format csv").out);
}

TEST_CASE("paper-examples prints PASS lines") {
  const Run r = run("paper-examples");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS singlet_witness_trace") != std::string::npos);
}
