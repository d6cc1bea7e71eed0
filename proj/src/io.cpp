#include "qfact/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace qfact::io {

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(std::span<const cplx> v) {
  json out = json::array();
  for (const cplx& z : v) out.push_back(to_json(z));
  return out;
}

json to_json(const ComplexMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) out.push_back(to_json(m.data().subspan(r * m.dim(), m.dim())));
  return out;
}

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("complex number must be an [re, im] pair, got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of [re, im] pairs");
  Vector v;
  v.reserve(j.size());
  for (const auto& z : j) v.push_back(complex_from_json(z));
  return v;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  const std::size_t n = j.size();
  Vector data;
  data.reserve(n * n);
  for (const auto& row : j) {
    Vector r = vector_from_json(row);
    if (r.size() != n) throw ParseError("matrix is not square: row of length " + std::to_string(r.size()) +
                                        " in a " + std::to_string(n) + "-row matrix");
    data.insert(data.end(), r.begin(), r.end());
  }
  return ComplexMatrix(n, std::move(data));
}

namespace {

Dims dims_from_json(const json& j) {
  if (!j.contains("dims")) throw ParseError("missing field \"dims\"");
  const json& d = j["dims"];
  if (!d.is_array() || d.size() != 2 || !d[0].is_number_unsigned() || !d[1].is_number_unsigned())
    throw ParseError("\"dims\" must be a pair of positive integers");
  Dims dims{d[0].get<std::size_t>(), d[1].get<std::size_t>()};
  if (dims.d1 == 0 || dims.d2 == 0) throw ParseError("\"dims\" must be a pair of positive integers");
  return dims;
}

std::optional<std::string> label_from_json(const json& j) {
  if (!j.contains("label")) return std::nullopt;
  if (!j["label"].is_string()) throw ParseError("\"label\" must be a string");
  return j["label"].get<std::string>();
}

}  // namespace

DensityMatrix StateFile::density(const Tolerances& tol) const { return DensityMatrix::create(matrix, dims, tol); }

PureState PureStateFile::state(const Tolerances& tol) const { return PureState::create(amplitudes, dims, tol); }

StateFile state_file_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("state file must be a JSON object");
  StateFile f{dims_from_json(j), {}, label_from_json(j)};
  if (!j.contains("matrix")) throw ParseError("missing field \"matrix\"");
  f.matrix = matrix_from_json(j["matrix"]);
  if (f.matrix.dim() != f.dims.total())
    throw ParseError("matrix is " + std::to_string(f.matrix.dim()) + "x" + std::to_string(f.matrix.dim()) +
                     " but dims give " + std::to_string(f.dims.total()));
  return f;
}

json to_json(const StateFile& f) {
  json j = {{"dims", {f.dims.d1, f.dims.d2}}, {"matrix", to_json(f.matrix)}};
  if (f.label) j["label"] = *f.label;
  return j;
}

StateFile state_file(const DensityMatrix& rho, std::optional<std::string> label) {
  return {rho.dims(), rho.matrix(), std::move(label)};
}

PureStateFile pure_state_file_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("pure-state file must be a JSON object");
  PureStateFile f{dims_from_json(j), {}, label_from_json(j)};
  if (!j.contains("amplitudes")) throw ParseError("missing field \"amplitudes\"");
  f.amplitudes = vector_from_json(j["amplitudes"]);
  if (f.amplitudes.size() != f.dims.total())
    throw ParseError("expected " + std::to_string(f.dims.total()) + " amplitudes, got " +
                     std::to_string(f.amplitudes.size()));
  return f;
}

json to_json(const PureStateFile& f) {
  json j = {{"dims", {f.dims.d1, f.dims.d2}}, {"amplitudes", to_json(f.amplitudes)}};
  if (f.label) j["label"] = *f.label;
  return j;
}

json to_json(const TailoredObservables& t) {
  json ga = json::array(), gb = json::array();
  for (const auto& g : t.generators_a) ga.push_back(to_json(g));
  for (const auto& g : t.generators_b) gb.push_back(to_json(g));
  const Dims d = t.factorization.dims();
  return {{"dims", {d.d1, d.d2}},
          {"unitary", to_json(t.factorization.unitary())},
          {"generators_a", ga},
          {"generators_b", gb},
          {"model_state", to_json(t.model_state)}};
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace qfact::io
