#pragma once

#include <json.hpp>

#include "schubert/pieri.hpp"

namespace schubert {

/// {"terms": [{"exp": [...], "num": "...", "den": "..."}]} in canonical order.
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j, int nvars);

/// {"n":..., "c":[k,m], "w":"...", "terms":[{"u":"...", "one_line":[...],
///  "coeff":{...}, "trace":{"p":..., "I":[...], "lambda":[...], "assoc":"..."}}]}
nlohmann::json expansion_to_json(const SchubertExpansion& e, int k, int m, const Permutation& w,
                                 bool with_traces);
SchubertExpansion expansion_from_json(const nlohmann::json& j);

nlohmann::json coefficient_to_json(int k, int m, const Permutation& w, const Permutation& u,
                                   const PieriCoefficient& pc);

}  // namespace schubert
