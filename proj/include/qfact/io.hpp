#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "qfact/factorization.hpp"

namespace qfact::io {

using json = nlohmann::json;

/// Malformed file content (bad JSON, missing field, wrong shape).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Complex numbers are [re, im] pairs; matrices are arrays of rows.
json to_json(cplx z);
json to_json(std::span<const cplx> v);
json to_json(const ComplexMatrix& m);
cplx complex_from_json(const json& j);
Vector vector_from_json(const json& j);
ComplexMatrix matrix_from_json(const json& j);

/// {"dims": [d1, d2], "matrix": [[[re, im], ...], ...], "label": "..."}
struct StateFile {
  Dims dims;
  ComplexMatrix matrix;
  std::optional<std::string> label;

  /// Throws InvalidStateError naming the violated density property.
  DensityMatrix density(const Tolerances& tol = default_tolerances()) const;
};

/// {"dims": [d1, d2], "amplitudes": [[re, im], ...], "label": "..."}
struct PureStateFile {
  Dims dims;
  Vector amplitudes;
  std::optional<std::string> label;

  PureState state(const Tolerances& tol = default_tolerances()) const;
};

StateFile state_file_from_json(const json& j);
json to_json(const StateFile& f);
StateFile state_file(const DensityMatrix& rho, std::optional<std::string> label = std::nullopt);

PureStateFile pure_state_file_from_json(const json& j);
json to_json(const PureStateFile& f);

json to_json(const TailoredObservables& t);

json read_json(const std::string& path);
/// Writes text to `path`, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

}  // namespace qfact::io
