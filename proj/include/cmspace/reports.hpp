#pragma once

#include "cmspace/cot_expansion.hpp"
#include "cmspace/identities.hpp"
#include "cmspace/relation.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cmspace {

/// Insertion-ordered JSON so serialized reports keep a fixed key order.
using Json = nlohmann::ordered_json;

/// Integer JSON value, or the string "-inf" for an exact zero residual.
Json residual_to_json(const std::optional<long>& residual_log2);

/// {"k": k, "coeffs": {"l": "c_l", ...}}
Json to_json(const CotDerivativeExpansion& expansion);

Json to_json(const ResidualReport& report, int digits);

/// {"inputs": [...], "inputs_digest": ..., "relations": [{"coeffs": [...],
///  "residual_log2": n}], "bound": B, "precision_bits": P,
///  "threshold_log2": T, "independent_count": m}
Json to_json(const RelationReport& report);

Json to_json(const ZetaRepresentationReport& report);

/// Structural check of a serialized RelationReport; returns the problems found.
std::vector<std::string> relation_report_schema_errors(const Json& json);
/// Structural check of a serialized ResidualReport.
std::vector<std::string> residual_report_schema_errors(const Json& json);

/// Flattens one JSON object into a CSV header line and one data row. Nested
/// values are written as compact JSON inside a quoted field.
std::string to_csv(const Json& report);

}  // namespace cmspace
