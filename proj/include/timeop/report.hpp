#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace timeop {

struct Verdict {
    std::string label;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

/// Structured result of one check: echoed inputs, computed quantities and
/// pass/fail verdicts with their thresholds.
struct Report {
    std::string name;
    std::string relation;  ///< the identity or inequality checked, plain notation
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<std::pair<std::string, double>> quantities;
    std::vector<Verdict> verdicts;
    std::optional<std::uint64_t> seed;

    void input(std::string label, std::string value);
    void input(std::string label, double value);
    void quantity(std::string label, double value);
    /// Adds a verdict `measured <= threshold`.
    bool check_le(std::string label, double measured, double threshold);
    /// Adds a verdict `measured >= threshold`.
    bool check_ge(std::string label, double measured, double threshold);
    /// Adds a boolean verdict (measured 1/0, threshold 1).
    bool check(std::string label, bool ok);

    bool all_pass() const;
    std::optional<double> find(const std::string& label) const;
    const Verdict* find_verdict(const std::string& label) const;
    nlohmann::ordered_json to_json() const;
};

/// Shortest round-trippable text for a double.
std::string format_double(double v);

}  // namespace timeop
