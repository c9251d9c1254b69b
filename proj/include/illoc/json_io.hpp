#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "illoc/matrix_m.hpp"
#include "illoc/matrix_mb.hpp"
#include "illoc/opposition.hpp"

namespace illoc {

using Json = nlohmann::ordered_json;

Json toJson(const Element& x);
Element elementFromJson(const AlgebraSpec& algebra, const Json& j);

Json toJson(const AlgebraSpec& spec);
const AlgebraSpec& algebraFromJson(const Json& j);

// {"on_true": [...], "on_false": [...], "exceptions": [{"at": [...], "value": [...]}]}
// Normal-form standard values are written as {"standard": [...]}.
Json toJson(const HyperValue& h);
HyperValue hyperFromJson(const AlgebraSpec& algebra, const Json& j);

// Compact command-line form: "on_true=a,b;on_false=" or "standard:a".
// "0" and "1" name bottom and top.
HyperValue parseHyperText(const AlgebraSpec& algebra, std::string_view text);

Json toJson(const Formula& f);
Formula formulaFromJson(const Json& j);

Json toJson(const AtomValuation2& e);

Json toJson(const MBValuation& val);
MBValuation valuationFromJson(const Json& j);

Json toJson(const Witness& w);

Json toJson(const OppositionCases& c);
Json toJson(const SquareReport& r);
Json toJson(const OppositionReport& r);

}  // namespace illoc
