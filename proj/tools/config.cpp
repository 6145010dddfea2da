#include "config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "timeop/errors.hpp"
#include "timeop/report.hpp"

namespace timeop::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) parts.push_back(trim(cur));
    return parts;
}

template <class T>
T number(const std::string& key, const std::string& text) {
    T v{};
    const auto t = trim(text);
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
        throw ConfigError("config: bad value for " + key + ": '" + text + "'");
    }
    return v;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

std::string join_bumps(const std::vector<std::pair<double, double>>& v) {
    std::string s;
    for (const auto& [a, b] : v) s += (s.empty() ? "" : ",") + format_double(a) + ":" + format_double(b);
    return s;
}

}  // namespace

void set_value(ExperimentConfig& c, const std::string& key, const std::string& value) {
    if (key == "grid_K") c.grid_K = number<double>(key, value);
    else if (key == "grid_N") c.grid_N = number<std::size_t>(key, value);
    else if (key == "seed") c.seed = number<std::uint64_t>(key, value);
    else if (key == "tol") c.tol = number<double>(key, value);
    else if (key == "horizon") c.horizon = number<double>(key, value);
    else if (key == "out") c.out = trim(value);
    else if (key == "a0") c.a0 = number<double>(key, value);
    else if (key == "n_list") {
        c.n_list.clear();
        for (const auto& p : split(value, ',')) c.n_list.push_back(number<int>(key, p));
    } else if (key == "bumps") {
        c.bumps.clear();
        for (const auto& p : split(value, ',')) {
            const auto ab = split(p, ':');
            if (ab.size() != 2) throw ConfigError("config: bump must be k1:k2, got '" + p + "'");
            c.bumps.emplace_back(number<double>(key, ab[0]), number<double>(key, ab[1]));
        }
    } else if (key == "power_tail_s") c.power_tail_s = number<double>(key, value);
    else if (key == "t_min") c.t_min = number<double>(key, value);
    else if (key == "t_samples") c.t_samples = number<std::size_t>(key, value);
    else if (key == "intervals") c.intervals = number<std::size_t>(key, value);
    else if (key == "barrier") c.barrier = number<double>(key, value);
    else if (key == "scatter_N") c.scatter_N = number<std::size_t>(key, value);
    else if (key == "scatter_horizon") c.scatter_horizon = number<double>(key, value);
    else if (key == "scatter_t") c.scatter_t = number<double>(key, value);
    else if (key == "scatter_s") c.scatter_s = number<double>(key, value);
    else if (key == "theta_phase") c.theta_phase = number<double>(key, value);
    else throw ConfigError("config: unknown key '" + key + "'");
}

void validate(const ExperimentConfig& c) {
    if (!(c.grid_K > 0.0)) throw ConfigError("config: grid_K must be positive");
    if (c.grid_N < 8 || c.grid_N % 2 != 0) throw ConfigError("config: grid_N must be even and >= 8");
    if (!(c.tol > 0.0)) throw ConfigError("config: tol must be positive");
    if (!(c.horizon > 0.0)) throw ConfigError("config: horizon must be positive");
    if (!(c.t_min > 0.0) || !(c.t_min < c.horizon)) throw ConfigError("config: need 0 < t_min < horizon");
    if (c.t_samples < 2) throw ConfigError("config: t_samples must be >= 2");
    if (c.n_list.empty()) throw ConfigError("config: n_list is empty");
    if (c.out.empty()) throw ConfigError("config: out is empty");
    if (c.scatter_N < 8 || c.scatter_N % 2 != 0) throw ConfigError("config: scatter_N must be even and >= 8");
    if (!(c.scatter_horizon > 0.0)) throw ConfigError("config: scatter_horizon must be positive");
}

ExperimentConfig parse_config(const std::string& text, ExperimentConfig base) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        }
        set_value(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    validate(base);
    return base;
}

ExperimentConfig load_config(const std::string& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), std::move(base));
}

std::string serialize(const ExperimentConfig& c) {
    std::ostringstream os;
    os << "grid_K = " << format_double(c.grid_K) << '\n'
       << "grid_N = " << c.grid_N << '\n'
       << "seed = " << c.seed << '\n'
       << "tol = " << format_double(c.tol) << '\n'
       << "horizon = " << format_double(c.horizon) << '\n'
       << "out = " << c.out << '\n'
       << "a0 = " << format_double(c.a0) << '\n'
       << "n_list = " << join_ints(c.n_list) << '\n'
       << "bumps = " << join_bumps(c.bumps) << '\n'
       << "power_tail_s = " << format_double(c.power_tail_s) << '\n'
       << "t_min = " << format_double(c.t_min) << '\n'
       << "t_samples = " << c.t_samples << '\n'
       << "intervals = " << c.intervals << '\n'
       << "barrier = " << format_double(c.barrier) << '\n'
       << "scatter_N = " << c.scatter_N << '\n'
       << "scatter_horizon = " << format_double(c.scatter_horizon) << '\n'
       << "scatter_t = " << format_double(c.scatter_t) << '\n'
       << "scatter_s = " << format_double(c.scatter_s) << '\n'
       << "theta_phase = " << format_double(c.theta_phase) << '\n';
    return os.str();
}

}  // namespace timeop::cli
