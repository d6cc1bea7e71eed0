#include "helpers.hpp"
#include "qfact/io.hpp"

#include <cstring>

using namespace qfact;
using namespace qfact::testing;

TEST_CASE("state files round-trip bit-exactly") {
  Rng rng(71);
  for (Dims dims : {Dims{2, 2}, Dims{2, 3}, Dims{3, 3}}) {
    for (int t = 0; t < 20; ++t) {
      const DensityMatrix rho = random_state(dims, rng);
      const std::string text = io::to_json(io::state_file(rho, "r")).dump();
      const io::StateFile back = io::state_file_from_json(io::json::parse(text));
      CHECK(back.dims == dims);
      CHECK(back.label == std::optional<std::string>("r"));
      CHECK(std::memcmp(back.matrix.data().data(), rho.matrix().data().data(), sizeof(cplx) * rho.dim() * rho.dim()) == 0);
    }
  }
}

TEST_CASE("pure-state files round-trip") {
  const io::PureStateFile f{{2, 1}, {cplx(0.6, 0.1), cplx(-0.2, 1.0 / 3.0)}, std::nullopt};
  const auto back = io::pure_state_file_from_json(io::json::parse(io::to_json(f).dump()));
  CHECK(back.amplitudes == f.amplitudes);
  CHECK_FALSE(back.label.has_value());
}

TEST_CASE("malformed files are rejected with a diagnostic") {
  using io::json;
  CHECK_THROWS_AS(io::state_file_from_json(json::parse(R"({"matrix": [[[1,0]]]})")), io::ParseError);
  CHECK_THROWS_AS(io::state_file_from_json(json::parse(R"({"dims": [1,1], "matrix": [[1]]})")), io::ParseError);
  CHECK_THROWS_AS(io::state_file_from_json(json::parse(R"({"dims": [2,1], "matrix": [[[1,0]]]})")), io::ParseError);
  CHECK_THROWS_AS(io::state_file_from_json(json::parse(R"({"dims": [0,1], "matrix": [[[1,0]]]})")), io::ParseError);
  CHECK_THROWS_AS(io::state_file_from_json(json::parse(R"({"dims": [2,1], "matrix": [[[1,0],[0,0]],[[0,0]]]})")),
                  io::ParseError);
  // parses, but is not a state
  const auto f = io::state_file_from_json(json::parse(R"({"dims": [2,1], "matrix": [[[1,0],[0,0]],[[0,0],[1,0]]]})"));
  try {
    f.density();
    FAIL("accepted trace 2");
  } catch (const InvalidStateError& e) {
    CHECK(std::string(e.what()).find("trace") != std::string::npos);
  }
  CHECK_THROWS_AS(io::read_json("/nonexistent/file.json"), io::ParseError);
}
