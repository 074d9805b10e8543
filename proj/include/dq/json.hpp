#pragma once

#include "dq/representation.hpp"

#include <json.hpp>

namespace dq {

using Json = nlohmann::ordered_json;

/// {"chart", "terms": [{"re", "im", "hbar", "monomial", "jet", "theta_weight", "weight_factor"}]}
/// re/im are the exact parts of the coefficient of hbar^k, as "n" or "n/d" strings.
/// A term with several jet factors lists them as "psi": [[[alpha], e], ...].
Json to_json(const Function& f);

/// {"chart", "rep", "terms": [{"re", "im", "hbar", "monomial", "derivative"}]}
Json to_json(const DiffOperator& d);

}  // namespace dq
