#include "timeop/report.hpp"

#include <cmath>
#include <cstdio>

namespace timeop {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void Report::input(std::string label, std::string value) {
    inputs.emplace_back(std::move(label), std::move(value));
}

void Report::input(std::string label, double value) {
    inputs.emplace_back(std::move(label), format_double(value));
}

void Report::quantity(std::string label, double value) {
    quantities.emplace_back(std::move(label), value);
}

bool Report::check_le(std::string label, double measured, double threshold) {
    const bool ok = measured <= threshold;
    verdicts.push_back({std::move(label), measured, threshold, ok});
    return ok;
}

bool Report::check_ge(std::string label, double measured, double threshold) {
    const bool ok = measured >= threshold;
    verdicts.push_back({std::move(label), measured, threshold, ok});
    return ok;
}

bool Report::check(std::string label, bool ok) {
    verdicts.push_back({std::move(label), ok ? 1.0 : 0.0, 1.0, ok});
    return ok;
}

bool Report::all_pass() const {
    for (const auto& v : verdicts) {
        if (!v.pass) return false;
    }
    return true;
}

std::optional<double> Report::find(const std::string& label) const {
    for (const auto& [l, v] : quantities) {
        if (l == label) return v;
    }
    return std::nullopt;
}

const Verdict* Report::find_verdict(const std::string& label) const {
    for (const auto& v : verdicts) {
        if (v.label == label) return &v;
    }
    return nullptr;
}

namespace {

nlohmann::ordered_json number(double v) {
    if (std::isfinite(v)) return v;
    return format_double(v);
}

}  // namespace

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["relation"] = relation;
    auto& in = j["inputs"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : inputs) in[k] = v;
    if (seed) j["seed"] = *seed;
    auto& q = j["quantities"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : quantities) q[k] = number(v);
    auto& vs = j["verdicts"] = nlohmann::ordered_json::array();
    for (const auto& v : verdicts) {
        vs.push_back({{"label", v.label},
                      {"measured", number(v.measured)},
                      {"threshold", number(v.threshold)},
                      {"pass", v.pass}});
    }
    j["pass"] = all_pass();
    return j;
}

}  // namespace timeop
