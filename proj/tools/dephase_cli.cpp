// dephase: run scenarios, sweeps and fringe patterns from presets or JSON files.
//
// Exit codes: 0 success, 1 computation error, 2 usage or configuration error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dephase/emit.hpp"
#include "dephase/errors.hpp"
#include "dephase/scenario.hpp"
#include "dephase/sweep.hpp"

namespace {

constexpr int kComputationError = 1;
constexpr int kUsageError = 2;

struct CommonOptions {
    std::string target;
    std::string format = "json";
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<double> tolerance;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("scenario", o.target, "preset name or path to a JSON scenario")->required();
    cmd->add_option("--format", o.format, "csv | json | plot-data")
        ->check(CLI::IsMember({"csv", "json", "plot-data"}));
    cmd->add_option("--out", o.out, "output file (default standard output)");
    cmd->add_option("--seed", o.seed, "Monte Carlo seed");
    cmd->add_option("--tolerance", o.tolerance, "quadrature relative tolerance");
}

dephase::Scenario load(const CommonOptions& o) {
    auto s = dephase::load_scenario(o.target);
    if (o.seed) s.seed = *o.seed;
    if (o.tolerance) s.quadrature.relative_tolerance = *o.tolerance;
    s.validate();
    return s;
}

void write(const CommonOptions& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw dephase::ConfigError("cannot open '" + o.out + "' for writing");
    f << text;
    if (!f) throw dephase::ConfigError("write to '" + o.out + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Emission-time dephasing of two-arm matter-wave interferometers"};
    app.require_subcommand(1);

    CommonOptions scenario_opts;
    auto* scenario_cmd = app.add_subcommand("scenario", "run a scenario and print its report");
    add_common(scenario_cmd, scenario_opts);

    CommonOptions sweep_opts;
    std::string param;
    double from = 0.0, to = 0.0;
    int points = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "sweep one parameter on a log grid (natural units)");
    add_common(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--param", param, "v | lambda | E0 | alpha")->required();
    sweep_cmd->add_option("--from", from, "first grid value")->required();
    sweep_cmd->add_option("--to", to, "last grid value")->required();
    sweep_cmd->add_option("--points", points, "number of grid points (>= 4)")->required();

    CommonOptions fringe_opts;
    std::optional<int> fringe_points;
    auto* fringe_cmd = app.add_subcommand("fringe", "fringe pattern of a scenario");
    add_common(fringe_cmd, fringe_opts);
    fringe_cmd->add_option("--points", fringe_points, "number of detector phases (>= 8)");

    auto* list_cmd = app.add_subcommand("list-presets", "list built-in scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (list_cmd->parsed()) {
            for (const auto& name : dephase::preset_names())
                std::cout << name << '\t' << dephase::preset(name).description << '\n';
        } else if (scenario_cmd->parsed()) {
            const auto s = load(scenario_opts);
            const auto format = dephase::parse_output_format(scenario_opts.format);
            write(scenario_opts, dephase::emit(dephase::run_scenario(s), format));
        } else if (sweep_cmd->parsed()) {
            const auto s = load(sweep_opts);
            const auto format = dephase::parse_output_format(sweep_opts.format);
            const auto grid = dephase::log_grid(from, to, points);
            write(sweep_opts, dephase::emit(dephase::run_sweep(s, dephase::parse_sweep_parameter(param), grid), format));
        } else if (fringe_cmd->parsed()) {
            auto s = load(fringe_opts);
            if (fringe_points) s.fringe.points = *fringe_points;
            s.outputs.push_back("fringe");
            s.validate();
            const auto format = dephase::parse_output_format(fringe_opts.format);
            write(fringe_opts, dephase::emit(dephase::run_scenario(s).fringe, format));
        }
    } catch (const dephase::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const dephase::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const dephase::SpecificationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const dephase::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const dephase::ConvergenceError& e) {
        std::cerr << "error: " << e.what() << " (last two estimates " << e.previous_estimate() << ", "
                  << e.latest_estimate() << ")\n";
        return kComputationError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kComputationError;
    }
    return 0;
}
