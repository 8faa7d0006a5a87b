#pragma once

#include "qgraph/qalg/laurent_rat.hpp"
#include "qgraph/qalg/multi_poly.hpp"

#include <json.hpp>

#include <string>

namespace qgraph {

/// "q^(k/2)", "q^k", "q" or "" for v^e.
std::string q_power_text(int e);

/// Descending powers, e.g. "-q^(1/2) - q^(-1/2)".
std::string to_text(const LaurentPoly& p);
/// "num" when den = 1, otherwise "(num)/(den)".
std::string to_text(const LaurentRat& r);

/// {"variable":"v","meaning":"q^(1/2)","terms":[[e,"p/q"],...]}, ascending e.
nlohmann::json to_json(const LaurentPoly& p);
/// {"num":..., "den":...}
nlohmann::json to_json(const LaurentRat& r);
/// {"variables":[...], "terms":[[[e...],"p/q"],...]}
nlohmann::json to_json(const MultiPoly& p);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
LaurentPoly laurent_poly_from_json(const nlohmann::json& j);
LaurentRat laurent_rat_from_json(const nlohmann::json& j);
MultiPoly multi_poly_from_json(const nlohmann::json& j);

}  // namespace qgraph
