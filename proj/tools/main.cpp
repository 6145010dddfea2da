#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "config.hpp"
#include "experiments.hpp"
#include "timeop/errors.hpp"

using namespace timeop::cli;

namespace {

struct Overrides {
    std::string config_path;
    std::optional<double> grid_K;
    std::optional<std::size_t> grid_N;
    std::optional<std::uint64_t> seed;
    std::optional<double> tol;
    std::optional<double> horizon;
    std::optional<std::string> out;
};

void add_options(CLI::App* cmd, Overrides& o) {
    cmd->add_option("config", o.config_path, "key = value configuration file");
    cmd->add_option("--grid-K", o.grid_K, "momentum half width K");
    cmd->add_option("--grid-N", o.grid_N, "momentum node count N (even, >= 8)");
    cmd->add_option("--seed", o.seed, "random seed for sampled sweeps");
    cmd->add_option("--tol", o.tol, "wave-operator Cauchy tolerance");
    cmd->add_option("--horizon", o.horizon, "time horizon for survival and half-time");
    cmd->add_option("--out", o.out, "output directory");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-operator laboratory: survival, uncertainty, bounds, weak Weyl relations, "
                 "domain diagnostics, scattering"};
    Overrides o;
    std::vector<CLI::App*> cmds;
    const std::map<std::string, std::string> blurbs{
        {"survival", "survival probabilities, decay bound, rapid-decay probe"},
        {"uncertainty", "time-energy uncertainty products and half-times"},
        {"bounds", "spectral-measure and resolvent bounds over random intervals"},
        {"weylrel", "weak Weyl residuals, Heisenberg shifts, commutator identities"},
        {"domain", "domain diagnostics over shrinking-spacing, growing-cutoff boxes"},
        {"scatter", "wave operators and conjugated time operators for a Gaussian potential"},
        {"demo-interval", "shift-boundary demo for d/dx on an interval"},
    };
    for (const auto& name : subcommands()) {
        auto* cmd = app.add_subcommand(name, blurbs.at(name));
        add_options(cmd, o);
        cmds.push_back(cmd);
    }
    app.require_subcommand(0, 1);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    CLI::App* chosen = nullptr;
    for (auto* c : cmds) {
        if (c->parsed()) chosen = c;
    }
    if (!chosen) {
        std::cerr << app.help();
        return 2;
    }

    ExperimentConfig config;
    try {
        if (!o.config_path.empty()) config = load_config(o.config_path);
        if (o.grid_K) config.grid_K = *o.grid_K;
        if (o.grid_N) config.grid_N = *o.grid_N;
        if (o.seed) config.seed = *o.seed;
        if (o.tol) config.tol = *o.tol;
        if (o.horizon) config.horizon = *o.horizon;
        if (o.out) config.out = *o.out;
        validate(config);
    } catch (const timeop::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    }
    const auto result = run(chosen->get_name(), config, std::cerr);
    if (!result.csv_path.empty()) std::cout << result.csv_path << '\n' << result.json_path << '\n';
    return result.exit_code;
}
