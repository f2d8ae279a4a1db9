// Command-line experiment runner: every verifier and probe, JSON or CSV out.

#include "cmspace/runner.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

struct Flags {
    long k = 0;
    long q = 0;
    long a = 0;
    long d = 0;
    long digits = 50;
    std::string bound = "100000000";
    std::string mode = "full";
    std::string format = "json";
    std::vector<std::string> values;
    std::string element;
};

void add_common(CLI::App& sub, Flags& flags) {
    sub.add_option("--digits", flags.digits, "Decimal digits of precision (>= 10)");
    sub.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Experiments on the Q-span of Hurwitz zeta values at rationals: evaluation, cotangent-derivative identities, exact "
                 "cyclotomic ratios and integer-relation probes."};
    app.require_subcommand(1);

    Flags flags;
    std::string batch_path;

    auto* expand = app.add_subcommand("expand-cot", "Integer csc/cot table of D^(k-1)(pi cot pi z)");
    expand->add_option("--k", flags.k)->required();
    expand->add_option("--format", flags.format)->check(CLI::IsMember({"json", "csv"}));

    auto* eval = app.add_subcommand("eval-zeta", "Evaluate zeta(k, a/q); omit --q/--a for zeta(k)");
    eval->add_option("--k", flags.k)->required();
    eval->add_option("--q", flags.q);
    eval->add_option("--a", flags.a);
    add_common(*eval, flags);

    auto* reflection = app.add_subcommand(
        "verify-lemma3", "Check zeta(k,a/q) + (-1)^k zeta(k,1-a/q) against the cotangent derivative at a/q");
    reflection->add_option("--k", flags.k)->required();
    reflection->add_option("--q", flags.q)->required();
    reflection->add_option("--a", flags.a)->required();
    add_common(*reflection, flags);

    auto* euler_factor = app.add_subcommand(
        "verify-lemma4", "Check zeta(k) prod_{p|q}(1 - p^-k) against q^-k sum_{(a,q)=1} zeta(k,a/q)");
    euler_factor->add_option("--k", flags.k)->required();
    euler_factor->add_option("--q", flags.q)->required();
    add_common(*euler_factor, flags);

    auto* ratio = app.add_subcommand(
        "exact-ratio", "Exact (zeta(k,a/q) - zeta(k,1-a/q)) / (2 pi i)^k in Q(zeta_q), odd k");
    ratio->add_option("--k", flags.k)->required();
    ratio->add_option("--q", flags.q)->required();
    ratio->add_option("--a", flags.a)->required();
    add_common(*ratio, flags);

    auto* probe_dim = app.add_subcommand("probe-dim", "Integer-relation probe of the spanning values of V_k(q)");
    probe_dim->add_option("--k", flags.k)->required();
    probe_dim->add_option("--q", flags.q)->required();
    probe_dim->add_option("--mode", flags.mode)->check(CLI::IsMember({"full", "plus", "minus"}));
    probe_dim->add_option("--bound", flags.bound, "Coefficient bound");
    add_common(*probe_dim, flags);

    auto* probe_zeta = app.add_subcommand(
        "probe-zeta", "Search zeta(k) among rational combinations of the minus values, with controls");
    probe_zeta->add_option("--k", flags.k)->required();
    probe_zeta->add_option("--q", flags.q)->required();
    probe_zeta->add_option("--bound", flags.bound, "Coefficient bound");
    add_common(*probe_zeta, flags);

    auto* relation = app.add_subcommand("find-relation", "Integer relation among expressions, e.g. 'zeta(2,1/3)' 'pi^2'");
    relation->add_option("--values", flags.values, "Expressions (pi, zeta(k), zeta(k,a/q), sqrt(x), + - * / ^)")
        ->required()
        ->expected(2, -1);
    relation->add_option("--bound", flags.bound, "Coefficient bound");
    add_common(*relation, flags);

    auto* subfield = app.add_subcommand("subfield-test", "Is an element of Q(zeta_q) inside Q(zeta_d)?");
    subfield->add_option("--element", flags.element, "Element as 'q; c_0, c_1, ...'")->required();
    subfield->add_option("--d", flags.d)->required();
    subfield->add_option("--format", flags.format)->check(CLI::IsMember({"json", "csv"}));

    auto* batch = app.add_subcommand("batch", "Run one JSON config per line; one JSON result line each");
    batch->add_option("file", batch_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cmspace::kExitUsage;
    }

    cmspace::RunResult result;
    if (batch->parsed()) {
        result = cmspace::run_batch_file(batch_path);
    } else {
        CLI::App* chosen = app.get_subcommands().front();
        cmspace::ExperimentConfig config;
        config.command = chosen->get_name();
        auto take = [&](const char* name, long value, std::optional<long>& target) {
            if (chosen->get_option_no_throw(name) != nullptr && chosen->count(name) > 0) {
                target = value;
            }
        };
        take("--k", flags.k, config.k);
        take("--q", flags.q, config.q);
        take("--a", flags.a, config.a);
        take("--d", flags.d, config.d);
        config.digits = flags.digits;
        if (config.bound.set_str(flags.bound, 10) != 0) {
            std::cerr << "--bound must be an integer\n";
            return cmspace::kExitUsage;
        }
        try {
            config.mode = cmspace::parse_probe_mode(flags.mode);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return cmspace::kExitUsage;
        }
        config.format = flags.format == "csv" ? cmspace::OutputFormat::csv : cmspace::OutputFormat::json;
        config.values = flags.values;
        config.element = flags.element;
        result = cmspace::run(config);
    }

    std::cout << result.output;
    if (!result.error.empty()) {
        std::cerr << "error: " << result.error << "\n";
        if (result.exit_code == cmspace::kExitUsage && !batch->parsed()) {
            std::cerr << "run with --help for usage\n";
        }
    }
    return result.exit_code;
}
