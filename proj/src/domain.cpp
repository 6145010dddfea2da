#include "timeop/domain.hpp"

#include <cmath>
#include <complex>

#include "timeop/errors.hpp"
#include "timeop/operators.hpp"
#include "timeop/parallel.hpp"

namespace timeop {

std::string_view to_string(DomainTarget target) {
    return target == DomainTarget::extended ? "extended" : "original";
}

namespace {

double estimate(const WaveFunction& psi, DomainTarget target) {
    if (target == DomainTarget::extended) return apply_T0(psi).norm();
    const auto over_k = apply_M_inv_k(psi);
    const auto d_over_k = apply_D_k(over_k);
    const auto d_psi = apply_D_k(psi);
    const auto over_k_d = apply_M_inv_k(d_psi);
    const double s = over_k.norm() * over_k.norm() + d_over_k.norm() * d_over_k.norm() +
                     d_psi.norm() * d_psi.norm() + over_k_d.norm() * over_k_d.norm();
    return std::sqrt(s);
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

DomainVerdict domain_diagnostic(const StateFamily& family, const BoxSequence& boxes,
                                const DomainOptions& options) {
    if (boxes.size() < 3) throw ConfigError("domain_diagnostic: need at least 3 boxes");
    validate(family);
    DomainVerdict v;
    v.state_id = describe(family);
    v.target = options.target;
    v.evolve_time = options.evolve_time;
    v.steps.resize(boxes.size());

    const auto base = boxes.grid(0);
    parallel_for(boxes.size(), [&](std::size_t b) {
        const auto grid = boxes.grid(b);
        auto psi = sample_profile(family, grid);
        if (options.evolve_time != 0.0) {
            const double t = options.evolve_time;
            psi = pointwise(psi, [t](double k, cplx a) { return std::polar(1.0, -0.5 * t * k * k) * a; });
        }
        DomainStep& s = v.steps[b];
        s.half_width = grid->half_width();
        s.count = grid->size();
        s.spacing = grid->spacing();
        s.scale = std::sqrt((s.half_width / base->half_width()) * (base->spacing() / s.spacing));
        s.estimate = estimate(psi, options.target);
    });

    const std::size_t n = v.steps.size();
    std::vector<double> lx, ly;
    for (std::size_t b = n - 3; b < n; ++b) {
        lx.push_back(std::log(v.steps[b].scale));
        ly.push_back(std::log(v.steps[b].estimate));
        if (b > n - 3) {
            const double prev = v.steps[b - 1].estimate;
            v.max_increment = std::max(v.max_increment, std::abs(v.steps[b].estimate - prev) / prev);
        }
    }
    v.growth_exponent = slope(lx, ly);
    v.converged = v.max_increment < options.cauchy_tolerance &&
                  v.growth_exponent <= options.exponent_threshold;
    return v;
}

}  // namespace timeop
