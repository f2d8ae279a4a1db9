#include "cmspace/reports.hpp"

#include <sstream>

namespace cmspace {

namespace {

Json integer_to_json(const Integer& value) {
    if (value.fits_slong_p()) {
        return value.get_si();
    }
    return value.get_str();
}

std::string csv_field(const Json& value) {
    std::string text;
    if (value.is_string()) {
        text = value.get<std::string>();
    } else {
        text = value.dump();
    }
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char ch : text) {
        if (ch == '"') {
            quoted += '"';
        }
        quoted += ch;
    }
    return quoted + "\"";
}

void require_key(const Json& json, const char* key, bool (Json::*is_type)() const noexcept, const char* type,
                 std::vector<std::string>& errors) {
    if (!json.contains(key)) {
        errors.push_back(std::string("missing key '") + key + "'");
    } else if (!(json.at(key).*is_type)()) {
        errors.push_back(std::string("key '") + key + "' is not " + type);
    }
}

bool is_residual(const Json& value) {
    return value.is_number_integer() || (value.is_string() && value.get<std::string>() == "-inf");
}

}  // namespace

Json residual_to_json(const std::optional<long>& residual_log2) {
    if (residual_log2) {
        return *residual_log2;
    }
    return "-inf";
}

Json to_json(const CotDerivativeExpansion& expansion) {
    Json coeffs = Json::object();
    for (const auto& [l, c] : expansion.coefficients) {
        coeffs[std::to_string(l)] = c.get_str();
    }
    return Json{{"k", expansion.order_k}, {"coeffs", coeffs}};
}

Json to_json(const ResidualReport& report, int digits) {
    return Json{{"description", report.description},
                {"digits", digits},
                {"lhs", report.lhs.to_decimal(digits)},
                {"rhs", report.rhs.to_decimal(digits)},
                {"residual_log2", residual_to_json(report.residual_log2)},
                {"threshold_log2", report.threshold_log2},
                {"precision_bits", report.precision_bits},
                {"pass", report.pass}};
}

Json to_json(const RelationReport& report) {
    Json relations = Json::array();
    for (const auto& r : report.relations) {
        Json coeffs = Json::array();
        for (const auto& c : r.coeffs) {
            coeffs.push_back(integer_to_json(c));
        }
        relations.push_back(Json{{"coeffs", coeffs}, {"residual_log2", residual_to_json(r.residual_log2)}});
    }
    return Json{{"inputs", report.inputs},
                {"inputs_digest", report.inputs_digest},
                {"relations", relations},
                {"bound", integer_to_json(report.coefficient_bound)},
                {"precision_bits", report.precision_bits},
                {"threshold_log2", report.threshold_log2},
                {"independent_count", report.empirical_independent_count}};
}

Json to_json(const ZetaRepresentationReport& report) {
    Json weights = Json::array();
    for (const auto& w : report.planted_weights) {
        weights.push_back(integer_to_json(w));
    }
    return Json{{"k", report.k},
                {"q", report.q},
                {"label", report.search.relations.empty() ? "none found" : "relation found"},
                {"verdict", report.verdict},
                {"search", to_json(report.search)},
                {"planted_control",
                 Json{{"weights", weights},
                      {"recovered", report.planted_recovered},
                      {"report", to_json(report.planted_control)}}},
                {"euler_factor_control",
                 Json{{"recovered", report.euler_recovered}, {"report", to_json(report.euler_control)}}}};
}

std::vector<std::string> relation_report_schema_errors(const Json& json) {
    std::vector<std::string> errors;
    if (!json.is_object()) {
        return {"report is not an object"};
    }
    require_key(json, "inputs", &Json::is_array, "an array", errors);
    require_key(json, "inputs_digest", &Json::is_string, "a string", errors);
    require_key(json, "relations", &Json::is_array, "an array", errors);
    require_key(json, "precision_bits", &Json::is_number_integer, "an integer", errors);
    require_key(json, "threshold_log2", &Json::is_number_integer, "an integer", errors);
    require_key(json, "independent_count", &Json::is_number_integer, "an integer", errors);
    if (!json.contains("bound") || !(json["bound"].is_number_integer() || json["bound"].is_string())) {
        errors.push_back("key 'bound' missing or not an integer");
    }
    if (!errors.empty()) {
        return errors;
    }
    for (const auto& input : json["inputs"]) {
        if (!input.is_string()) {
            errors.push_back("input is not a decimal string");
        }
    }
    for (const auto& relation : json["relations"]) {
        if (!relation.is_object() || !relation.contains("coeffs") || !relation["coeffs"].is_array() ||
            relation["coeffs"].size() != json["inputs"].size()) {
            errors.push_back("relation coefficients malformed");
            continue;
        }
        if (!relation.contains("residual_log2") || !is_residual(relation["residual_log2"])) {
            errors.push_back("relation residual_log2 malformed");
        }
    }
    const auto expected_count =
        static_cast<long>(json["inputs"].size()) - static_cast<long>(json["relations"].size());
    if (json["independent_count"].get<long>() != expected_count) {
        errors.push_back("independent_count != inputs - relations");
    }
    return errors;
}

std::vector<std::string> residual_report_schema_errors(const Json& json) {
    std::vector<std::string> errors;
    if (!json.is_object()) {
        return {"report is not an object"};
    }
    require_key(json, "description", &Json::is_string, "a string", errors);
    require_key(json, "digits", &Json::is_number_integer, "an integer", errors);
    require_key(json, "lhs", &Json::is_string, "a string", errors);
    require_key(json, "rhs", &Json::is_string, "a string", errors);
    require_key(json, "threshold_log2", &Json::is_number_integer, "an integer", errors);
    require_key(json, "precision_bits", &Json::is_number_integer, "an integer", errors);
    require_key(json, "pass", &Json::is_boolean, "a boolean", errors);
    if (!json.contains("residual_log2") || !is_residual(json["residual_log2"])) {
        errors.push_back("key 'residual_log2' missing or malformed");
    }
    return errors;
}

std::string to_csv(const Json& report) {
    std::ostringstream header, row;
    bool first = true;
    for (const auto& [key, value] : report.items()) {
        header << (first ? "" : ",") << csv_field(key);
        row << (first ? "" : ",") << csv_field(value);
        first = false;
    }
    return header.str() + "\n" + row.str() + "\n";
}

}  // namespace cmspace
