#pragma once

#include <json.hpp>

#include "uff/monoid.hpp"

namespace uff {

/// Presentation documents: {"kind":"fg-puiseux","generators":[...]},
/// {"kind":"family","rule":"grams"|"primes-squared"|"dyadic"},
/// {"kind":"threshold-union","base":{...},"theta":"1"}, {"kind":"quadrant-union"}.
/// Throws std::invalid_argument on malformed input.
Monoid presentation_from_json(const nlohmann::json& doc);
/// Custom families other than the dyadic one have no document form.
nlohmann::json presentation_to_json(const Monoid& m);

nlohmann::json to_json(const Element& e);
Element element_from_json(const nlohmann::json& j);
/// [{"atom":"3/4","mult":2}, ...]
nlohmann::json to_json(const Factorization& z);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const BudgetUsed& b);
nlohmann::json to_json(const ProbeReport& r);
nlohmann::json to_json(const ElementList& l);
nlohmann::json to_json(const FactorizationList& l);
nlohmann::json to_json(const LengthSet& l);
nlohmann::json to_json(const Budget& b);

} // namespace uff
