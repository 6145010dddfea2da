#include "timeop/interval_demo.hpp"

#include <cmath>
#include <numbers>

#include "timeop/errors.hpp"

namespace timeop {

namespace {

constexpr double kExact = 1e-10;

// <e_m', exp(i eps x) e_m> = int_0^1 exp(i a x) dx
std::complex<double> overlap(double a) {
    if (std::abs(a) < 1e-12) return {1.0, 0.0};
    const std::complex<double> ia(0.0, a);
    return (std::exp(ia) - 1.0) / ia;
}

}  // namespace

Report interval_ccr_demo(std::complex<double> theta, double epsilon, const IntervalDemoOptions& options) {
    if (std::abs(std::abs(theta) - 1.0) > 1e-12) throw ConfigError("interval demo: |theta| must be 1");
    if (options.basis_modes < 2 || options.tested_modes < 1 || options.tested_modes > options.basis_modes) {
        throw ConfigError("interval demo: bad mode counts");
    }
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const int lo = -options.basis_modes / 2;
    const int hi = lo + options.basis_modes;
    const int t_lo = -options.tested_modes / 2;
    const int t_hi = t_lo + options.tested_modes;

    double worst = 0.0;
    for (int m = t_lo; m < t_hi; ++m) {
        double sq = 0.0;
        for (int mp = lo; mp < hi; ++mp) {
            const double a = two_pi * (m - mp) + epsilon;
            const auto r = (two_pi * (mp - m) - epsilon) * overlap(a);
            sq += std::norm(r);
        }
        worst = std::max(worst, std::sqrt(sq));
    }
    const double mismatch = std::abs(std::exp(std::complex<double>(0.0, epsilon)) - 1.0);

    Report rep;
    rep.name = "interval_ccr_demo";
    rep.relation = "P exp(i eps Q) = exp(i eps Q)(P + eps) on Dom(P_theta) iff exp(i eps) = 1";
    rep.input("theta_re", theta.real());
    rep.input("theta_im", theta.imag());
    rep.input("epsilon", epsilon);
    rep.input("basis_modes", std::to_string(options.basis_modes));
    rep.input("tested_modes", std::to_string(options.tested_modes));
    rep.quantity("boundary_mismatch", mismatch);
    rep.quantity("shift_residual", worst);
    rep.check("relation holds exactly when boundary preserved", (worst < kExact) == (mismatch < kExact));
    return rep;
}

}  // namespace timeop
