#include "jgate/document.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace jgate {

double tolerance_from_env() {
  const char* raw = std::getenv("JGATE_TOLERANCE");
  if (raw == nullptr || *raw == '\0') return kUnimodularTolerance;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0.0) || !std::isfinite(value)) {
    throw ParseError(std::string("JGATE_TOLERANCE is not a positive number: ") + raw);
  }
  return value;
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("complex number must be a two-element array [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json matrix_to_json(const UnimodularMatrix& m) {
  Json out = Json::array();
  for (const Complex& z : m.entries()) out.push_back(complex_to_json(z));
  return out;
}

UnimodularMatrix matrix_from_json(const Json& j, double tolerance) {
  if (!j.is_array() || j.size() != 4) {
    throw ParseError("matrix must be an array of 4 complex entries in row-major order");
  }
  return make_unimodular(complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2]),
                         complex_from_json(j[3]), tolerance);
}

InputDocument parse_input_document(const Json& j, double default_tolerance) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "g" && key != "h" && key != "options") throw ParseError("unknown field: " + key);
  }
  if (!j.contains("g")) throw ParseError("missing field: g");
  if (!j.contains("h")) throw ParseError("missing field: h");

  InputDocument doc;
  if (j.contains("options")) {
    const Json& opts = j["options"];
    if (!opts.is_object()) throw ParseError("options must be an object");
    for (const auto& [key, value] : opts.items()) {
      if (key == "tolerance") {
        if (!value.is_number() || !(value.get<double>() > 0.0)) {
          throw ParseError("options.tolerance must be a positive number");
        }
        doc.options.tolerance = value.get<double>();
      } else if (key == "iterations") {
        if (!value.is_number_integer() || value.get<long long>() < 0) {
          throw ParseError("options.iterations must be a non-negative integer");
        }
        doc.options.iterations = value.get<int>();
      } else {
        throw ParseError("unknown option: " + key);
      }
    }
  }
  const double tol = doc.options.tolerance.value_or(default_tolerance);

  const Json& g = j["g"];
  if (g.is_object()) {
    if (g.size() != 1 || !g.contains("lambda")) throw ParseError("g object must be {\"lambda\": [re, im]}");
    const Complex lambda = complex_from_json(g["lambda"]);
    if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) throw NonFiniteEntry();
    doc.g = LambdaForm{lambda};
  } else {
    doc.g = matrix_from_json(g, tol);
  }
  doc.h = matrix_from_json(j["h"], tol);
  return doc;
}

InputDocument parse_input_document(const std::string& text, double default_tolerance) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_input_document(j, default_tolerance);
}

Json to_json(const InputDocument& doc) {
  Json out = Json::object();
  if (const auto* lf = std::get_if<LambdaForm>(&doc.g)) {
    out["g"] = Json{{"lambda", complex_to_json(lf->lambda)}};
  } else {
    out["g"] = matrix_to_json(std::get<UnimodularMatrix>(doc.g));
  }
  out["h"] = matrix_to_json(doc.h);
  if (doc.options.tolerance || doc.options.iterations) {
    Json opts = Json::object();
    if (doc.options.tolerance) opts["tolerance"] = *doc.options.tolerance;
    if (doc.options.iterations) opts["iterations"] = *doc.options.iterations;
    out["options"] = opts;
  }
  return out;
}

UnimodularMatrix parse_matrix_document(const std::string& text, double tolerance) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (j.is_object()) {
    if (!j.contains("matrix")) throw ParseError("missing field: matrix");
    return matrix_from_json(j["matrix"], tolerance);
  }
  return matrix_from_json(j, tolerance);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace jgate
