#include "timeop/potential.hpp"

#include <cmath>

#include "summation.hpp"
#include "timeop/errors.hpp"
#include "timeop/operators.hpp"

namespace timeop {

namespace {

constexpr double kTailShare = 1e-10;

}  // namespace

PotentialSpec::PotentialSpec(std::string name, std::function<double(double)> v,
                             const MomentumGrid& probe)
    : name_(std::move(name)), v_(std::move(v)) {
    if (!v_) throw ConfigError("potential: empty generator");
    const auto x = probe.positions();
    const double dx = probe.position_spacing();
    const double edge = 0.4 * probe.position_extent();
    detail::CompensatedSum l1, l2, l1_tail, l2_tail;
    bool bounded = true;
    double min_v = 0.0;
    for (const double xm : x) {
        const double val = v_(xm);
        if (!std::isfinite(val)) {
            bounded = false;
            continue;
        }
        max_abs_ = std::max(max_abs_, std::abs(val));
        min_v = std::min(min_v, val);
        l1.add(std::abs(val) * dx);
        l2.add(val * val * dx);
        if (std::abs(xm) > edge) {
            l1_tail.add(std::abs(val) * dx);
            l2_tail.add(val * val * dx);
        }
    }
    if (!bounded) throw ConfigError("potential " + name_ + ": non-finite samples");
    l1_ = l1.value();
    l2_ = std::sqrt(l2.value());
    const bool in_l1 = l1_tail.value() <= kTailShare * l1_;
    const bool in_l2 = l2_tail.value() <= kTailShare * l2.value();
    putnam_ = min_v >= 0.0 && in_l1;
    kuroda_ = in_l1 && in_l2;
}

PotentialSpec PotentialSpec::zero(const MomentumGrid& probe) {
    return PotentialSpec("zero", [](double) { return 0.0; }, probe);
}

PotentialSpec PotentialSpec::gaussian(double amplitude, double width, const MomentumGrid& probe) {
    if (!(width > 0.0)) throw ConfigError("gaussian potential: width must be positive");
    std::string name = (amplitude >= 0.0 ? "barrier(" : "well(") + std::to_string(amplitude) + "," +
                       std::to_string(width) + ")";
    return PotentialSpec(
        std::move(name),
        [amplitude, width](double x) {
            const double u = x / width;
            return amplitude * std::exp(-u * u);
        },
        probe);
}

std::vector<double> PotentialSpec::samples(const MomentumGrid& grid) const {
    const auto x = grid.positions();
    std::vector<double> out(x.size());
    for (std::size_t m = 0; m < x.size(); ++m) out[m] = v_(x[m]);
    return out;
}

WaveFunction apply_H1(const WaveFunction& psi, const PotentialSpec& v) {
    require_representation(psi, Representation::momentum, "apply_H1");
    const auto kinetic = apply_H0(psi);
    if (v.is_zero()) return kinetic;
    const auto vx = v.samples(psi.grid());
    const auto pos = to_position(psi);
    std::vector<cplx> amps(pos.size());
    for (std::size_t m = 0; m < amps.size(); ++m) amps[m] = vx[m] * pos[m];
    return kinetic + to_momentum(WaveFunction(psi.grid_ptr(), std::move(amps), Representation::position));
}

}  // namespace timeop
