#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace timeop::cli {

/// Settings shared by all subcommands. Text form is one `key = value` per
/// line; '#' starts a comment. Lists are comma separated, bump supports are
/// written k1:k2.
struct ExperimentConfig {
    double grid_K = 32.0;
    std::size_t grid_N = 8192;
    std::uint64_t seed = 20261018;
    double tol = 1e-3;        ///< wave-operator Cauchy tolerance
    double horizon = 100.0;   ///< survival and half-time horizon
    std::string out = "out";

    double a0 = 1.0;
    std::vector<int> n_list{2, 5, 10, 50, 100};
    std::vector<std::pair<double, double>> bumps{{1.0, 2.0}, {0.5, 1.5}, {-2.5, -1.0}};
    double power_tail_s = 1.0;

    double t_min = 0.1;       ///< log-spaced survival samples in [t_min, horizon]
    std::size_t t_samples = 60;
    std::size_t intervals = 100;  ///< random Borel intervals for the bounds sweep

    double barrier = 0.1;          ///< amplitude of the Gaussian barrier
    std::size_t scatter_N = 65536;  ///< node count for scattering runs (same K)
    double scatter_horizon = 256.0;
    double scatter_t = 2.0;
    double scatter_s = 5.0;

    double theta_phase = 0.3;  ///< boundary phase arg(theta) for demo-interval

    bool operator==(const ExperimentConfig&) const = default;
};

/// Throws ConfigError on unknown keys, malformed values or failed validation.
ExperimentConfig parse_config(const std::string& text, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});
std::string serialize(const ExperimentConfig& config);

/// Sets one key from its text form.
void set_value(ExperimentConfig& config, const std::string& key, const std::string& value);

void validate(const ExperimentConfig& config);

}  // namespace timeop::cli
