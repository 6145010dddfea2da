#include "timeop/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "summation.hpp"
#include "timeop/errors.hpp"
#include "timeop/evolution.hpp"
#include "timeop/operators.hpp"
#include "timeop/states.hpp"

namespace timeop {

BorelSet::BorelSet(std::vector<std::pair<double, double>> intervals) {
    for (const auto& [a, b] : intervals) {
        if (!(a <= b)) throw ConfigError("BorelSet: interval with a > b");
    }
    std::sort(intervals.begin(), intervals.end());
    for (const auto& iv : intervals) {
        if (!intervals_.empty() && iv.first <= intervals_.back().second) {
            intervals_.back().second = std::max(intervals_.back().second, iv.second);
        } else {
            intervals_.push_back(iv);
        }
    }
    for (const auto& [a, b] : intervals_) lebesgue_ += b - a;
}

bool BorelSet::contains(double e) const {
    for (const auto& [a, b] : intervals_) {
        if (e >= a && e <= b) return true;
    }
    return false;
}

double spectral_weight_H0(const WaveFunction& psi, const BorelSet& b) {
    require_representation(psi, Representation::momentum, "spectral_weight_H0");
    const auto k = psi.grid().nodes();
    const auto w = psi.grid().weights();
    detail::CompensatedSum sum;
    for (std::size_t j = 0; j < psi.size(); ++j) {
        if (b.contains(0.5 * k[j] * k[j])) sum.add(w[j] * std::norm(psi[j]));
    }
    return sum.value();
}

Report check_ac_bound(const WaveFunction& psi, const BorelSet& b) {
    const double weight = spectral_weight_H0(psi, b);
    const double t_norm = apply_T0(psi).norm();
    const double bound = t_norm * psi.norm() * b.lebesgue();
    Report rep;
    rep.name = "ac_bound";
    rep.relation = "|E(B) psi|^2 <= |T0 psi| |psi| |B|";
    rep.input("intervals", std::to_string(b.intervals().size()));
    rep.quantity("lebesgue", b.lebesgue());
    rep.quantity("spectral_weight", weight);
    rep.quantity("T0_psi_norm", t_norm);
    rep.quantity("bound", bound);
    rep.check_le("spectral weight vs bound", weight, bound + 1e-8);
    return rep;
}

double f_eps_lambda(double eps, double lambda) {
    if (!(eps > 0.0)) throw ConfigError("f_eps_lambda: eps must be positive");
    if (lambda == 0.0) return 0.0;
    const double half_pi = 0.5 * std::numbers::pi;
    return std::copysign(half_pi, lambda) - std::copysign(std::atan(eps / std::abs(lambda)), lambda);
}

Report resolvent_bound_check(const WaveFunction& psi, double lambda, double eps) {
    if (!(eps > 0.0)) throw ConfigError("resolvent_bound_check: eps must be positive");
    const auto r = resolvent_H0(psi, cplx(lambda, eps));
    const double lhs = std::abs(inner(psi, r).imag());
    const double rhs = std::numbers::pi * apply_T0(psi).norm() * psi.norm();
    Report rep;
    rep.name = "resolvent_bound";
    rep.relation = "|Im <psi, R0(lambda + i eps) psi>| <= pi |T0 psi| |psi|";
    rep.input("lambda", lambda);
    rep.input("eps", eps);
    rep.quantity("im_resolvent", lhs);
    rep.quantity("bound", rhs);
    rep.check_le("resolvent imaginary part vs bound", lhs, rhs);
    return rep;
}

Report commutator_check(const WaveFunction& psi, double t) {
    require_representation(psi, Representation::momentum, "commutator_check");
    auto cos_t = [t](const WaveFunction& s) {
        return pointwise(s, [t](double k, cplx a) { return std::cos(0.5 * t * k * k) * a; });
    };
    auto sin_t = [t](const WaveFunction& s) {
        return pointwise(s, [t](double k, cplx a) { return std::sin(0.5 * t * k * k) * a; });
    };
    const cplx it(0.0, t);
    const auto t_psi = apply_T0(psi);
    const auto r_cos = apply_T0(cos_t(psi)) - cos_t(t_psi) + it * sin_t(psi);
    const auto r_sin = apply_T0(sin_t(psi)) - sin_t(t_psi) - it * cos_t(psi);
    const double tol = 1e-6 * (1.0 + std::abs(t)) * psi.norm();

    Report rep;
    rep.name = "commutator_check";
    rep.relation = "[T0, cos tH0] = -it sin tH0, [T0, sin tH0] = it cos tH0";
    rep.input("t", t);
    rep.check_le("cos residual", r_cos.norm(), tol);
    rep.check_le("sin residual", r_sin.norm(), tol);
    return rep;
}

Report survival_inequality_check(const WaveFunction& psi, std::span<const double> times) {
    const OperatorAction T0 = [](const WaveFunction& s) { return apply_T0(s); };
    const double dT = std_dev(T0, psi);
    const double norm2 = psi.norm() * psi.norm();
    const auto series = survival_series(psi, psi, times);
    std::size_t violations = 0;
    double worst_ratio = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        if (t == 0.0) continue;
        const double p = series.probability[i] / (norm2 * norm2);
        const double bound = 4.0 * dT * dT * norm2 / (t * t);
        worst_ratio = std::max(worst_ratio, p / bound);
        if (p > bound) ++violations;
    }
    Report rep;
    rep.name = "survival_inequality";
    rep.relation = "P(t) <= 4 (dT0)^2 |psi|^2 / t^2";
    rep.input("samples", std::to_string(times.size()));
    rep.quantity("delta_T", dT);
    rep.quantity("max P/bound", worst_ratio);
    rep.check_le("violations", static_cast<double>(violations), 0.0);
    return rep;
}

Uncertainty uncertainty(const WaveFunction& psi) {
    const OperatorAction T0 = [](const WaveFunction& s) { return apply_T0(s); };
    const OperatorAction H0 = [](const WaveFunction& s) { return apply_H0(s); };
    Uncertainty u;
    u.delta_T = moments(T0, psi).std_dev / psi.norm();
    u.delta_H = moments(H0, psi).std_dev / psi.norm();
    u.product = u.delta_T * u.delta_H;
    return u;
}

double uncertainty_product(const WaveFunction& psi) { return uncertainty(psi).product; }

Report kobe_sequence(std::span<const int> n_list, double a0, GridPtr grid) {
    if (!std::is_sorted(n_list.begin(), n_list.end()) ||
        std::adjacent_find(n_list.begin(), n_list.end()) != n_list.end()) {
        throw ConfigError("kobe_sequence: n_list must be strictly increasing");
    }
    Report rep;
    rep.name = "kobe_sequence";
    rep.relation = "dT0 dH0 > 1/2, decreasing in n, limit 1/2";
    rep.input("a0", a0);
    std::string ns;
    for (int n : n_list) ns += (ns.empty() ? "" : ",") + std::to_string(n);
    rep.input("n_list", ns);
    std::vector<double> products;
    for (int n : n_list) {
        const auto phi = make_phi_n(n, a0, grid);
        const auto u = uncertainty(phi);
        products.push_back(u.product);
        rep.quantity("n=" + std::to_string(n) + " delta_T", u.delta_T);
        rep.quantity("n=" + std::to_string(n) + " delta_H", u.delta_H);
        rep.quantity("n=" + std::to_string(n) + " product", u.product);
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < products.size(); ++i) decreasing = decreasing && products[i] < products[i - 1];
    rep.check("strictly decreasing", decreasing);
    const double smallest = products.empty() ? 0.0 : *std::min_element(products.begin(), products.end());
    rep.check_ge("min product", smallest, 0.5);
    if (!products.empty()) rep.verdicts.back().pass = smallest > 0.5;
    return rep;
}

}  // namespace timeop
