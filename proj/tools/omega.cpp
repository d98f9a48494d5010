// omega: command-line front end for the orthogonality-graph toolkit.

#include "omega/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

int exit_code(omega::error_kind kind) {
    switch (kind) {
    case omega::error_kind::validation:
    case omega::error_kind::internal: return 2;
    case omega::error_kind::precondition:
    case omega::error_kind::void_bound: return 3;
    case omega::error_kind::io: return 4;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tools for the independence number of the hypercube orthogonality graph"};
    app.require_subcommand(1);

    std::string format_name = "text";
    bool no_timing = false;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--no-timing", no_timing, "Omit the timing field (byte-stable output)");

    int n = 0;
    int k = 0;
    int m = 0;
    int max_k = 4;
    std::optional<std::string> out;
    std::optional<std::string> set_path;
    std::optional<std::uint64_t> seed;
    std::uint64_t trials = omega::default_trials;
    bool exact = false;
    bool sampled = false;
    std::vector<int> n_list;

    auto* bound = app.add_subcommand("bound", "Report a_n, status and cross-check bounds for one n");
    bound->add_option("--n", n, "Dimension")->required();

    auto* construct = app.add_subcommand("construct", "Build and verify the extremal independent set");
    construct->add_option("--n", n, "Dimension (multiple of 4)")->required();
    construct->add_option("--out", out, "Write the set file here");
    construct->add_option("--seed", seed, "Seed for sampled verification");
    construct->add_option("--trials", trials, "Pair samples for sampled verification")->capture_default_str();
    auto* exact_flag = construct->add_flag("--exact", exact, "Force exhaustive verification");
    construct->add_flag("--sampled", sampled, "Force sampled verification")->excludes(exact_flag);

    auto* certify = app.add_subcommand("certify", "Run the rank certificate at n = 2^k");
    certify->add_option("--k", k, "Exponent")->required();
    certify->add_option("--set", set_path, "Optional witness set file");

    auto* alpha = app.add_subcommand("alpha", "Exact independence number for n <= 8");
    alpha->add_option("--n", n, "Dimension")->required();
    alpha->add_option("--out", out, "Write the witness set file here");

    auto* spectral = app.add_subcommand("spectral-check", "Exact Bose-Mesner identities for Q_m");
    spectral->add_option("--m", m, "Dimension")->required();

    auto* table = app.add_subcommand("table", "Summary table for n = 2^k, k = 2..max_k");
    table->add_option("--max-k", max_k, "Largest exponent")->capture_default_str();
    table->add_option("--n-list", n_list, "Explicit list of n (multiples of 4)")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    const std::map<std::string, omega::output_format> formats{
        {"text", omega::output_format::text}, {"json", omega::output_format::json}, {"csv", omega::output_format::csv}};
    const auto format = formats.at(format_name);

    try {
        omega::RunReport report;
        if (*bound) {
            report = omega::cmd_bound(n);
        } else if (*construct) {
            omega::ConstructOptions options;
            options.n = n;
            options.out = out;
            options.seed = seed;
            options.trials = trials;
            options.mode = exact ? omega::verify_mode::exact
                                 : (sampled ? omega::verify_mode::sampled : omega::verify_mode::automatic);
            report = omega::cmd_construct(options);
        } else if (*certify) {
            report = omega::cmd_certify(k, set_path);
        } else if (*alpha) {
            report = omega::cmd_alpha(n, out);
        } else if (*spectral) {
            report = omega::cmd_spectral_check(m);
        } else if (*table) {
            report = omega::cmd_table(max_k, n_list);
        }
        std::cout << omega::render(report, format, !no_timing);
        return report.ok() ? 0 : 2;
    } catch (const omega::error& e) {
        std::cout << omega::error_object(e).dump(2) << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cout << omega::ordered_json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump(2) << "\n";
        return 2;
    }
}
