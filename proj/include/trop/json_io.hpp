#pragma once

#include "trop/berkovich.hpp"
#include "trop/blueprint.hpp"
#include "trop/point.hpp"
#include "trop/tropicalization.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace trop {

using nlohmann::json;

// Rationals travel as exact "num/den" strings in every format.
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const MonoidSignature& sig);
MonoidSignature signature_from_json(const json& j);

// Terms are {"coeff": "num/den", "exps": [int, ...]}; sums are term arrays.
json to_json(const FieldTerm& t);
json to_json(const TropTerm& t);
json to_json(const FieldFormalSum& s);
json to_json(const TropFormalSum& s);
FieldFormalSum field_sum_from_json(const json& j, const MonoidSignature& sig);
TropFormalSum trop_sum_from_json(const json& j, const MonoidSignature& sig);

// Polynomials carry their signature: {"sig": ..., "terms": [...]}.
json to_json(const FieldPolynomial& p);
FieldPolynomial polynomial_from_json(const json& j);

// Presentations:
// {
//   "sig": {"num_vars": n, "laurent": b},
//   "coeff_domain": "fieldQ" | "trop",
//   "valuation": {"kind": "trivial"} | {"kind": "padic", "prime": p},   (fieldQ)
//   "relations": [{"lhs": [...], "rhs": [...], "kind": "leq" | "eqv"}],
//   "flags": {"idempotent": b, "totally_positive": b}
// }
json to_json(const BlueprintPresentation& b);
BlueprintPresentation presentation_from_json(const json& j);

// Point clouds.  JSON keeps exact coordinates; CSV lists every grid point
// with a trailing 0/1 membership flag; plot output is decimal, one point per
// line, members only.
json points_to_json(const std::vector<TropPoint>& members);
std::string points_to_csv(const std::vector<TropPoint>& grid,
                          const std::vector<bool>& member);
std::string points_to_plot(const std::vector<TropPoint>& members, int precision);

}  // namespace trop
