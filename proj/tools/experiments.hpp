#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "timeop/report.hpp"

namespace timeop::cli {

const std::vector<std::string>& subcommands();

struct RunResult {
    int exit_code = 0;  ///< 0 all verdicts pass, 1 some verdict fails, 2 config/convergence error
    std::vector<Report> reports;
    std::string csv_path;
    std::string json_path;
};

/// Runs one experiment and writes <out>/<name>.csv and <out>/<name>.json.
/// Configuration and convergence errors are reported on `log` as exit code 2.
RunResult run(const std::string& subcommand, const ExperimentConfig& config, std::ostream& log);

}  // namespace timeop::cli
