#include "cmspace/runner.hpp"

#include "cmspace/cot_expansion.hpp"
#include "cmspace/cyclotomic.hpp"
#include "cmspace/errors.hpp"
#include "cmspace/expression.hpp"
#include "cmspace/hurwitz.hpp"
#include "cmspace/identities.hpp"

#include <fstream>

namespace cmspace {

namespace {

long require(const std::optional<long>& value, const char* name, const std::string& command) {
    if (!value) {
        throw UsageError(command + ": missing required parameter --" + name);
    }
    return *value;
}

Json base_fields(const ExperimentConfig& config) {
    Json out = Json::object();
    if (config.k) {
        out["k"] = *config.k;
    }
    if (config.a) {
        out["a"] = *config.a;
    }
    if (config.q) {
        out["q"] = *config.q;
    }
    return out;
}

Json merge(Json head, const Json& tail) {
    for (const auto& [key, value] : tail.items()) {
        head[key] = value;
    }
    return head;
}

struct Outcome {
    Json report;
    bool verified = true;
};

Outcome run_expand(const ExperimentConfig& c) {
    return {to_json(expand(require(c.k, "k", c.command)))};
}

Outcome run_eval_zeta(const ExperimentConfig& c) {
    const long k = require(c.k, "k", c.command);
    const long q = c.q.value_or(1);
    const long a = c.a.value_or(q);
    const long bits = digits_to_bits(c.digits);
    const BigFloat value = hurwitz_zeta(k, a, q, bits);
    return {Json{{"k", k},
                 {"a", a},
                 {"q", q},
                 {"digits", c.digits},
                 {"precision_bits", bits},
                 {"value", value.to_decimal(static_cast<int>(c.digits))}}};
}

Outcome run_reflection(const ExperimentConfig& c) {
    const long k = require(c.k, "k", c.command);
    const long q = require(c.q, "q", c.command);
    const long a = require(c.a, "a", c.command);
    const auto report = verify_reflection_identity(k, a, q, digits_to_bits(c.digits));
    return {merge(base_fields(c), to_json(report, static_cast<int>(c.digits))), report.pass};
}

Outcome run_euler_factor(const ExperimentConfig& c) {
    const long k = require(c.k, "k", c.command);
    const long q = require(c.q, "q", c.command);
    const auto report = verify_euler_factor_identity(k, q, digits_to_bits(c.digits));
    return {merge(base_fields(c), to_json(report, static_cast<int>(c.digits))), report.pass};
}

Outcome run_exact_ratio(const ExperimentConfig& c) {
    const long k = require(c.k, "k", c.command);
    const long q = require(c.q, "q", c.command);
    const long a = require(c.a, "a", c.command);
    const long bits = digits_to_bits(c.digits);
    const CyclotomicElement rho = exact_ratio(k, a, q);
    const ComplexValue embedded = embed_numeric(rho, bits);
    const BigFloat numeric = numeric_ratio_imag(k, a, q, bits);
    const auto check = make_residual_report("embedding vs numeric ratio", embedded.imag, numeric, bits,
                                            default_threshold_log2(bits));
    const bool odd = galois_apply(rho, q - 1) == -rho;
    Json coeffs = Json::array();
    for (const auto& r : rho.coeffs()) {
        coeffs.push_back(r.get_str());
    }
    const int digits = static_cast<int>(c.digits);
    return {Json{{"k", k},
                 {"a", a},
                 {"q", q},
                 {"element", rho.to_text()},
                 {"coeffs", coeffs},
                 {"digits", c.digits},
                 {"embedding_real", embedded.real.to_decimal(digits)},
                 {"embedding_imag", embedded.imag.to_decimal(digits)},
                 {"numeric_ratio_imag", numeric.to_decimal(digits)},
                 {"residual_log2", residual_to_json(check.residual_log2)},
                 {"threshold_log2", check.threshold_log2},
                 {"conjugation_negates", odd},
                 {"pass", check.pass && odd}},
            check.pass && odd};
}

Outcome run_probe_dim(const ExperimentConfig& c) {
    const long k = require(c.k, "k", c.command);
    const long q = require(c.q, "q", c.command);
    const long bits = digits_to_bits(c.digits);
    Json head{{"k", k}, {"q", q}, {"mode", to_string(c.mode)}, {"digits", c.digits}};
    if (q == 2) {
        // V_k(2) is spanned by the single nonzero value zeta(k, 1/2).
        const BigFloat value = hurwitz_zeta(k, 1, 2, bits);
        head["special_case"] = "q = 2: V_k(2) is spanned by zeta(k,1/2) alone";
        head["inputs"] = Json::array({value.to_decimal(static_cast<int>(c.digits))});
        head["independent_count"] = 1;
        return {head};
    }
    const RelationReport report = probe_dimension(k, q, c.mode, bits, c.bound);
    head["note"] = "empirical count at this precision and bound; evidence, not a proof of independence";
    return {merge(head, to_json(report))};
}

Outcome run_probe_zeta(const ExperimentConfig& c) {
    const long k = require(c.k, "k", c.command);
    const long q = require(c.q, "q", c.command);
    const auto report = zeta_representation_probe(k, q, digits_to_bits(c.digits), c.bound);
    Json out = to_json(report);
    out["digits"] = c.digits;
    out["note"] =
        "If dim V_k(q) = phi(q)/2 then zeta(k) is a rational combination of the minus values; for coprime q, r > 2 "
        "that cannot hold for both, so dim V_k(q) >= phi(q)/2 + 1 or dim V_k(r) >= phi(r)/2 + 1. This run is "
        "numerical evidence only.";
    return {out};
}

Outcome run_find_relation(const ExperimentConfig& c) {
    if (c.values.size() < 2) {
        throw UsageError("find-relation: need at least 2 --values");
    }
    const long bits = digits_to_bits(c.digits);
    std::vector<BigFloat> values;
    for (const auto& text : c.values) {
        values.push_back(evaluate_expression(text, bits));
    }
    Json head{{"expressions", c.values}, {"digits", c.digits}};
    return {merge(head, to_json(find_integer_relation(values, bits, c.bound)))};
}

Outcome run_subfield(const ExperimentConfig& c) {
    const long d = require(c.d, "d", c.command);
    if (c.element.empty()) {
        throw UsageError("subfield-test: missing required parameter --element");
    }
    const CyclotomicElement x = CyclotomicElement::parse(c.element);
    return {Json{{"element", x.to_text()}, {"d", d}, {"in_subfield", is_in_subfield(x, d)}}};
}

Outcome dispatch(const ExperimentConfig& c) {
    if (c.digits < 10) {
        throw UsageError("--digits must be >= 10");
    }
    if (c.bound < 1) {
        throw UsageError("--bound must be positive");
    }
    if (c.command == "expand-cot") return run_expand(c);
    if (c.command == "eval-zeta") return run_eval_zeta(c);
    if (c.command == "verify-lemma3") return run_reflection(c);
    if (c.command == "verify-lemma4") return run_euler_factor(c);
    if (c.command == "exact-ratio") return run_exact_ratio(c);
    if (c.command == "probe-dim") return run_probe_dim(c);
    if (c.command == "probe-zeta") return run_probe_zeta(c);
    if (c.command == "find-relation") return run_find_relation(c);
    if (c.command == "subfield-test") return run_subfield(c);
    throw UsageError("unknown command '" + c.command + "'");
}

std::optional<long> optional_long(const Json& line, const char* key) {
    if (!line.contains(key)) {
        return std::nullopt;
    }
    if (!line[key].is_number_integer()) {
        throw UsageError(std::string("field '") + key + "' must be an integer");
    }
    return line[key].get<long>();
}

}  // namespace

const std::vector<std::string>& known_commands() {
    static const std::vector<std::string> commands{"expand-cot",   "eval-zeta", "verify-lemma3",
                                                   "verify-lemma4", "exact-ratio", "probe-dim",
                                                   "probe-zeta",   "find-relation", "subfield-test"};
    return commands;
}

ExperimentConfig config_from_json(const Json& line) {
    if (!line.is_object() || !line.contains("command") || !line["command"].is_string()) {
        throw UsageError("config line needs a string field 'command'");
    }
    ExperimentConfig c;
    c.command = line["command"].get<std::string>();
    c.k = optional_long(line, "k");
    c.q = optional_long(line, "q");
    c.a = optional_long(line, "a");
    c.d = optional_long(line, "d");
    if (auto digits = optional_long(line, "digits")) {
        c.digits = *digits;
    }
    if (line.contains("bound")) {
        const auto& b = line["bound"];
        if (b.is_number_integer()) {
            c.bound = Integer(b.get<long>());
        } else if (b.is_string()) {
            if (c.bound.set_str(b.get<std::string>(), 10) != 0) {
                throw UsageError("field 'bound' is not an integer");
            }
        } else {
            throw UsageError("field 'bound' must be an integer");
        }
    }
    if (line.contains("mode")) {
        if (!line["mode"].is_string()) {
            throw UsageError("field 'mode' must be a string");
        }
        c.mode = parse_probe_mode(line["mode"].get<std::string>());
    }
    if (line.contains("format")) {
        const auto format = line["format"].is_string() ? line["format"].get<std::string>() : "";
        if (format != "json" && format != "csv") {
            throw UsageError("field 'format' must be json or csv");
        }
        c.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
    }
    if (line.contains("values")) {
        if (!line["values"].is_array()) {
            throw UsageError("field 'values' must be an array of strings");
        }
        for (const auto& v : line["values"]) {
            if (!v.is_string()) {
                throw UsageError("field 'values' must be an array of strings");
            }
            c.values.push_back(v.get<std::string>());
        }
    }
    if (line.contains("element")) {
        if (!line["element"].is_string()) {
            throw UsageError("field 'element' must be a string");
        }
        c.element = line["element"].get<std::string>();
    }
    return c;
}

RunResult run(const ExperimentConfig& config) {
    RunResult result;
    try {
        Outcome outcome = dispatch(config);
        result.exit_code = outcome.verified ? kExitOk : kExitFailed;
        result.output = config.format == OutputFormat::csv ? to_csv(outcome.report) : outcome.report.dump() + "\n";
        result.report = std::move(outcome.report);
    } catch (const UsageError& e) {
        result.exit_code = kExitUsage;
        result.error = e.what();
    } catch (const DomainError& e) {
        result.exit_code = kExitUsage;
        result.error = e.what();
    }
    return result;
}

RunResult run_batch(std::istream& lines) {
    RunResult batch;
    std::string text;
    long number = 0;
    while (std::getline(lines, text)) {
        ++number;
        if (text.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        Json record{{"line", number}};
        try {
            ExperimentConfig config = config_from_json(Json::parse(text));
            config.format = OutputFormat::json;
            RunResult one = run(config);
            record["exit"] = one.exit_code;
            if (one.report) {
                record["result"] = *one.report;
            } else {
                record["error"] = one.error;
            }
        } catch (const Json::parse_error& e) {
            record["exit"] = kExitUsage;
            record["error"] = std::string("malformed JSON: ") + e.what();
        } catch (const UsageError& e) {
            record["exit"] = kExitUsage;
            record["error"] = e.what();
        }
        if (record["exit"].get<int>() != kExitOk) {
            batch.exit_code = kExitFailed;
        }
        batch.output += record.dump() + "\n";
    }
    return batch;
}

RunResult run_batch_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        RunResult failed;
        failed.exit_code = kExitUsage;
        failed.error = "cannot read batch file '" + path + "'";
        return failed;
    }
    return run_batch(in);
}

}  // namespace cmspace
