#pragma once

#include <optional>
#include <string>
#include <variant>

#include "json.hpp"
#include "jgate/errors.hpp"
#include "jgate/mat2c.hpp"

namespace jgate {

using Json = nlohmann::ordered_json;

class ParseError : public Error {
 public:
  using Error::Error;
};

/// g given by its expanding eigenvalue, i.e. already diag(lambda, 1/lambda).
struct LambdaForm {
  Complex lambda;
  friend bool operator==(const LambdaForm&, const LambdaForm&) = default;
};

struct InputOptions {
  std::optional<double> tolerance;  // unimodularity check
  std::optional<int> iterations;
  friend bool operator==(const InputOptions&, const InputOptions&) = default;
};

/// A matrix pair document:
///
///   {"g": [[re,im],[re,im],[re,im],[re,im]] | {"lambda": [re,im]},
///    "h": [[re,im],[re,im],[re,im],[re,im]],
///    "options": {"tolerance": 1e-9, "iterations": 10}}
///
/// Matrices are row-major (a, b, c, d); "options" is optional.
struct InputDocument {
  std::variant<UnimodularMatrix, LambdaForm> g;
  UnimodularMatrix h;
  InputOptions options;
  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Validation tolerance: JGATE_TOLERANCE when set and valid, else 1e-9.
double tolerance_from_env();

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);
Json matrix_to_json(const UnimodularMatrix& m);
UnimodularMatrix matrix_from_json(const Json& j, double tolerance);

/// Throws ParseError for malformed documents and NotUnimodular /
/// NonFiniteEntry for invalid matrices. options.tolerance, when present,
/// overrides default_tolerance.
InputDocument parse_input_document(const Json& j, double default_tolerance);
InputDocument parse_input_document(const std::string& text, double default_tolerance);

/// Canonical form: keys in the order g, h, options; options omitted when empty.
Json to_json(const InputDocument& doc);

/// Accepts a bare 4-entry matrix or {"matrix": [...]}.
UnimodularMatrix parse_matrix_document(const std::string& text, double tolerance);

std::string read_file(const std::string& path);

}  // namespace jgate
