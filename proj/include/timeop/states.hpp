#pragma once

#include <functional>
#include <string>
#include <variant>

#include "timeop/wavefunction.hpp"

namespace timeop {

/// k^n e^{-a0 k^2}, normalized.
struct PhiN {
    int n = 2;
    double a0 = 1.0;
};

/// exp(-1/((k - k1)(k2 - k))) on (k1, k2), zero elsewhere. The support must
/// lie on one side of the origin.
struct Bump {
    double k1 = 1.0;
    double k2 = 2.0;
};

/// g(k) = e^{-1/k^2} / (1 + |k|^s), 1/2 < s <= 3/2. Smooth at the origin with
/// a power-law tail.
struct PowerTail {
    double s = 1.0;
};

using StateFamily = std::variant<PhiN, Bump, PowerTail>;

std::string describe(const StateFamily& family);

/// Throws ConfigError if the family parameters are out of range.
void validate(const StateFamily& family);

/// Unnormalized profile value. PhiN carries its exact continuum normalization
/// (evaluated in log space so large n does not overflow).
double profile(const StateFamily& family, double k);

/// Profile sampled on the grid's momentum nodes, not normalized.
WaveFunction sample_profile(const StateFamily& family, GridPtr grid);

/// Sampled, coverage-checked (PhiN) and normalized by lattice quadrature.
WaveFunction make_state(const StateFamily& family, GridPtr grid);

WaveFunction make_phi_n(int n, double a0, GridPtr grid);
WaveFunction make_bump(double k1, double k2, GridPtr grid);
WaveFunction make_power_tail(double s, GridPtr grid);

/// Mass of |phi_n|^2 outside [-K, K] for the normalized continuum state.
double phi_n_tail_mass(int n, double a0, double half_width);

using OperatorAction = std::function<WaveFunction(const WaveFunction&)>;

struct Moments {
    double mean = 0.0;          ///< <psi, A psi> / |psi|^2
    double imaginary_part = 0.0;  ///< Im of the same quotient, reported
    double std_dev = 0.0;       ///< |(A - mean) psi|
};

/// Raises SymmetryViolation when |Im <psi, A psi>| > 1e-6 |psi|^2.
Moments moments(const OperatorAction& apply, const WaveFunction& psi);
double expectation(const OperatorAction& apply, const WaveFunction& psi);
double std_dev(const OperatorAction& apply, const WaveFunction& psi);

}  // namespace timeop
