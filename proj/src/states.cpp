#include "timeop/states.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <sstream>

#include "timeop/errors.hpp"

namespace timeop {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kTailMassLimit = 1e-12;
constexpr double kSymmetryTolerance = 1e-6;

}  // namespace

std::string describe(const StateFamily& family) {
    std::ostringstream os;
    std::visit(overloaded{
                   [&](const PhiN& f) { os << "phi_" << f.n << "(a0=" << f.a0 << ")"; },
                   [&](const Bump& f) { os << "bump[" << f.k1 << "," << f.k2 << "]"; },
                   [&](const PowerTail& f) { os << "g(s=" << f.s << ")"; },
               },
               family);
    return os.str();
}

void validate(const StateFamily& family) {
    std::visit(overloaded{
                   [](const PhiN& f) {
                       if (f.n < 0) throw ConfigError("phi_n: n must be >= 0");
                       if (!(f.a0 > 0.0)) throw ConfigError("phi_n: a0 must be positive");
                   },
                   [](const Bump& f) {
                       if (!(f.k1 < f.k2)) throw ConfigError("bump: need k1 < k2");
                       if (f.k1 <= 0.0 && f.k2 >= 0.0) {
                           throw ConfigError("bump: support must not contain k = 0");
                       }
                   },
                   [](const PowerTail& f) {
                       if (!(f.s > 0.5 && f.s <= 1.5)) {
                           throw ConfigError("power tail: s must lie in (1/2, 3/2]");
                       }
                   },
               },
               family);
}

double profile(const StateFamily& family, double k) {
    return std::visit(
        overloaded{
            [k](const PhiN& f) -> double {
                if (k == 0.0) return f.n == 0 ? std::exp(0.5 * (0.5 * std::log(2.0 * f.a0) -
                                                                 std::lgamma(0.5)))
                                              : 0.0;
                // log N_n = ((n + 1/2) log(2 a0) - log Gamma(n + 1/2)) / 2
                const double log_norm =
                    0.5 * ((f.n + 0.5) * std::log(2.0 * f.a0) - std::lgamma(f.n + 0.5));
                const double mag = std::exp(f.n * std::log(std::abs(k)) - f.a0 * k * k + log_norm);
                return (k < 0.0 && f.n % 2 == 1) ? -mag : mag;
            },
            [k](const Bump& f) -> double {
                if (k <= f.k1 || k >= f.k2) return 0.0;
                return std::exp(-1.0 / ((k - f.k1) * (f.k2 - k)));
            },
            [k](const PowerTail& f) -> double {
                if (k == 0.0) return 0.0;
                return std::exp(-1.0 / (k * k)) / (1.0 + std::pow(std::abs(k), f.s));
            },
        },
        family);
}

WaveFunction sample_profile(const StateFamily& family, GridPtr grid) {
    validate(family);
    std::vector<cplx> amps(grid->size());
    const auto k = grid->nodes();
    for (std::size_t j = 0; j < amps.size(); ++j) amps[j] = profile(family, k[j]);
    return WaveFunction(std::move(grid), std::move(amps), Representation::momentum);
}

double phi_n_tail_mass(int n, double a0, double half_width) {
    return boost::math::gamma_q(n + 0.5, 2.0 * a0 * half_width * half_width);
}

WaveFunction make_state(const StateFamily& family, GridPtr grid) {
    validate(family);
    if (const auto* phi = std::get_if<PhiN>(&family)) {
        const double tail = phi_n_tail_mass(phi->n, phi->a0, grid->half_width());
        if (tail > kTailMassLimit) {
            std::ostringstream os;
            os << describe(family) << ": grid K = " << grid->half_width()
               << " leaves tail mass " << tail << " > " << kTailMassLimit;
            throw DomainCoverageError(os.str());
        }
    }
    if (const auto* bump = std::get_if<Bump>(&family)) {
        const double K = grid->half_width();
        if (std::abs(bump->k1) > K || std::abs(bump->k2) > K) {
            throw ConfigError(describe(family) + ": support exceeds the momentum box");
        }
    }
    auto raw = sample_profile(family, std::move(grid));
    if (!(raw.norm() > 0.0)) throw ConfigError(describe(family) + ": no grid node inside support");
    return raw.normalized();
}

WaveFunction make_phi_n(int n, double a0, GridPtr grid) {
    return make_state(PhiN{n, a0}, std::move(grid));
}

WaveFunction make_bump(double k1, double k2, GridPtr grid) {
    return make_state(Bump{k1, k2}, std::move(grid));
}

WaveFunction make_power_tail(double s, GridPtr grid) {
    return make_state(PowerTail{s}, std::move(grid));
}

Moments moments(const OperatorAction& apply, const WaveFunction& psi) {
    const double norm2 = psi.norm() * psi.norm();
    if (!(norm2 > 0.0)) throw ConfigError("moments: zero state");
    const auto a_psi = apply(psi);
    const cplx quotient = inner(psi, a_psi) / norm2;
    if (std::abs(quotient.imag()) > kSymmetryTolerance) {
        std::ostringstream os;
        os << "expectation has imaginary part " << quotient.imag() << " (tolerance "
           << kSymmetryTolerance << " |psi|^2)";
        throw SymmetryViolation(os.str());
    }
    Moments m;
    m.mean = quotient.real();
    m.imaginary_part = quotient.imag();
    m.std_dev = (a_psi - psi.scaled(m.mean)).norm();
    return m;
}

double expectation(const OperatorAction& apply, const WaveFunction& psi) {
    return moments(apply, psi).mean;
}

double std_dev(const OperatorAction& apply, const WaveFunction& psi) {
    return moments(apply, psi).std_dev;
}

}  // namespace timeop
