#include "garsia/json_io.hpp"

#include <fstream>

namespace garsia {

Json poly_to_json(const IntPolynomial& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

IntPolynomial poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array");
  std::vector<Integer> coeffs;
  for (const auto& v : j) {
    if (v.is_number_integer())
      coeffs.emplace_back(v.get<long>());
    else if (v.is_string())
      coeffs.emplace_back(v.get<std::string>());
    else
      throw ParseError("polynomial coefficients must be integers or integer strings");
  }
  return IntPolynomial(std::move(coeffs));
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("rational must be an integer or a \"p/q\" string");
}

namespace {

Json parameter_to_json(const Parameter& p) {
  Json j;
  switch (p.kind()) {
    case Parameter::Kind::Rational:
      j["type"] = "rational";
      j["value"] = rational_to_json(p.rat());
      break;
    case Parameter::Kind::Algebraic:
      j["type"] = "algebraic";
      j["min_poly"] = poly_to_json(p.alg().min_poly());
      j["lo"] = rational_to_json(p.alg().lo());
      j["hi"] = rational_to_json(p.alg().hi());
      break;
    case Parameter::Kind::FieldElement: {
      j["type"] = "field_element";
      Json arr = Json::array();
      for (const auto& c : p.elem().rep_padded()) arr.push_back(rational_to_json(c));
      j["coeffs"] = arr;
      break;
    }
    case Parameter::Kind::Transcendental:
      j["type"] = "transcendental";
      break;
  }
  return j;
}

Parameter parameter_from_json(const Json& j, const Parameter* lambda_for_field) {
  if (!j.is_object() || !j.contains("type")) throw ParseError("parameter needs a type");
  std::string type = j.at("type").get<std::string>();
  if (type == "rational") return Parameter::rational(rational_from_json(j.at("value")));
  if (type == "algebraic") {
    IntPolynomial m = poly_from_json(j.at("min_poly"));
    Rational lo = rational_from_json(j.at("lo"));
    Rational hi = rational_from_json(j.at("hi"));
    return Parameter::algebraic(AlgebraicNumber::real_root(std::move(m), lo, hi));
  }
  if (type == "field_element") {
    if (!lambda_for_field || lambda_for_field->kind() != Parameter::Kind::Algebraic)
      throw ParseError("field_element tau requires an algebraic lambda");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return Parameter::field_element(
        NumberFieldElement(lambda_for_field->alg().field(), QPoly(std::move(coeffs))));
  }
  if (type == "transcendental") return Parameter::transcendental();
  throw ParseError("unknown parameter type: " + type);
}

}  // namespace

Json spec_to_json(const IfsSpec& spec) {
  Json j;
  Json forms = Json::array();
  for (const auto& [a, b] : spec.forms) forms.push_back(Json::array({a, b}));
  j["forms"] = forms;
  Json weights = Json::array();
  for (const auto& w : spec.weights) weights.push_back(rational_to_json(w));
  j["weights"] = weights;
  j["lambda"] = parameter_to_json(spec.lambda);
  j["tau"] = parameter_to_json(spec.tau);
  return j;
}

IfsSpec spec_from_json(const Json& j) {
  IfsSpec spec;
  if (!j.is_object()) throw ParseError("spec must be a JSON object");
  for (const auto& f : j.at("forms")) {
    if (!f.is_array() || f.size() != 2) throw ParseError("each form is a pair [a, b]");
    spec.forms.emplace_back(f[0].get<long>(), f[1].get<long>());
  }
  for (const auto& w : j.at("weights")) spec.weights.push_back(rational_from_json(w));
  spec.lambda = parameter_from_json(j.at("lambda"), nullptr);
  spec.tau = parameter_from_json(j.at("tau"), &spec.lambda);
  spec.validate();
  return spec;
}

IfsSpec spec_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  return spec_from_json(j);
}

Json distribution_to_json(const DiscreteDistribution<Rational>& d) {
  Json arr = Json::array();
  for (const auto& [v, p] : d) arr.push_back({{"value", rational_to_json(v)}, {"prob", rational_to_json(p)}});
  return arr;
}

Json witness_to_json(const OverlapWitness& w) {
  Json j;
  j["n"] = w.level;
  j["p1"] = poly_to_json(w.p1);
  j["p2"] = poly_to_json(w.p2);
  j["digits_a"] = w.first;
  j["digits_b"] = w.second;
  return j;
}

Json deriv_matrix_to_json(const DerivMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.entries) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(rational_to_json(e));
    rows.push_back(r);
  }
  return rows;
}

Json vector_to_json(const std::vector<Rational>& v) {
  Json arr = Json::array();
  for (const auto& e : v) arr.push_back(rational_to_json(e));
  return arr;
}

}  // namespace garsia
