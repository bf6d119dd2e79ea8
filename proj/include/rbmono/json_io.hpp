// SPDX-License-Identifier: MIT
#pragma once

#include "rbmono/families.hpp"
#include "rbmono/operator.hpp"
#include "rbmono/recurrences.hpp"

#include <json.hpp>

namespace rbm {

using nlohmann::json;

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json seq_to_json(const Seq& s);
Seq seq_from_json(const json& j, long first);

json index_set_to_json(const IndexSet& I);
IndexSet index_set_from_json(const json& j);

AlgebraContext ctx_from_json(const json& j);

json spec_to_json(const FamilySpec& spec);
/// Schema problems raise ParseError; constraint violations are left to validate_family_params.
FamilySpec spec_from_json(const json& j);

/// {"coverage_degree", "ctx", "rows": [[n, m, "p/q", n', m'], ...]} in graded order.
json table_to_json(const MonomialOperator& op, long degree);
MonomialOperator table_from_json(const json& j);

json report_to_json(const CheckReport& r);

/// Parses text, mapping every nlohmann error to ParseError.
json parse_json_text(const std::string& text);
/// Sorted keys, two-space indent, trailing newline.
std::string dump_json(const json& j);

} // namespace rbm
