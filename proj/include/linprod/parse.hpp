#pragma once

#include "json.hpp"
#include "linprod/polynomial.hpp"

namespace linprod {

// Text grammar (EBNF):
//   poly   = [sign] term { sign term } | "0"
//   term   = factor { "*" factor }
//   factor = coeff | var [ "^" nat ]
//   coeff  = nat [ "/" nat ]
//   sign   = "+" | "-"
// Variables must exist in the ring; division is only a rational literal.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

// Ring description document: {"variables":[...], "field":"q"|"p:<prime>",
//  "matrix_layout":{"rows":r,"cols":c}?, "grading":[[..],..]?}
RingPtr ring_from_json(const nlohmann::json& j);
nlohmann::json ring_to_json(const RingPtr& ring);

FieldSpec field_from_string(const std::string& s);

}  // namespace linprod
