#pragma once

#include <string>

#include "garsia/derivs.hpp"
#include "garsia/ifs.hpp"
#include "garsia/selfsim.hpp"

#include "json.hpp"

namespace garsia {

using Json = nlohmann::json;

// Serialization surface:
//   polynomials      -> JSON integer arrays, ascending degree
//   rationals        -> "p/q" strings
//   IfsSpec          -> {"forms": [[a,b],...], "weights": ["1/3",...],
//                        "lambda": {...}, "tau": {...}}
//   parameters       -> {"type": "rational", "value": "1/2"}
//                     | {"type": "algebraic", "min_poly": [...], "lo": "p/q", "hi": "p/q"}
//                     | {"type": "field_element", "coeffs": ["p/q", ...]}
//                     | {"type": "transcendental"}
// A field_element tau lives in Q(lambda) and requires an algebraic lambda.

Json poly_to_json(const IntPolynomial& p);
IntPolynomial poly_from_json(const Json& j);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json spec_to_json(const IfsSpec& spec);
IfsSpec spec_from_json(const Json& j);
IfsSpec spec_from_file(const std::string& path);

Json distribution_to_json(const DiscreteDistribution<Rational>& d);
Json witness_to_json(const OverlapWitness& w);

Json deriv_matrix_to_json(const DerivMatrix& m);
Json vector_to_json(const std::vector<Rational>& v);

}  // namespace garsia
