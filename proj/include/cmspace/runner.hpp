#pragma once

#include "cmspace/numerics.hpp"
#include "cmspace/relation.hpp"
#include "cmspace/reports.hpp"

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace cmspace {

enum class OutputFormat { json, csv };

/// Everything one experiment needs; all state comes from the command line or
/// a batch line.
struct ExperimentConfig {
    std::string command;
    std::optional<long> k;
    std::optional<long> q;
    std::optional<long> a;
    std::optional<long> d;
    long digits = 50;
    Integer bound = 100'000'000;
    ProbeMode mode = ProbeMode::full;
    OutputFormat format = OutputFormat::json;
    /// Expressions for find-relation.
    std::vector<std::string> values;
    /// Canonical element text for subfield-test.
    std::string element;
};

/// Subcommands accepted by run().
const std::vector<std::string>& known_commands();

/// Exit status conventions.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunResult {
    int exit_code = kExitOk;
    /// Serialized report (with trailing newline), empty on usage errors.
    std::string output;
    /// Diagnostic for standard error.
    std::string error;
    /// The report as JSON, when one was produced.
    std::optional<Json> report;
};

/// Builds a config from a batch line object such as
/// {"command": "expand-cot", "k": 5}. Throws UsageError on bad fields.
ExperimentConfig config_from_json(const Json& line);

/// Runs one experiment. Exit 0 on success, 1 when a verification misses its
/// threshold, 2 on usage or domain errors. Output is deterministic.
RunResult run(const ExperimentConfig& config);

/// Runs one JSON config per line and emits one JSON line per input line, in
/// order: {"line": n, "exit": code, "result": {...}} or
/// {"line": n, "exit": 2, "error": "..."}. Blank lines are skipped.
/// Exit 0 iff every line exited 0, else 1.
RunResult run_batch(std::istream& lines);

/// run_batch on a file; exit 2 if it cannot be read.
RunResult run_batch_file(const std::string& path);

}  // namespace cmspace
