#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "timeop/potential.hpp"
#include "timeop/report.hpp"
#include "timeop/states.hpp"
#include "timeop/wavefunction.hpp"

namespace timeop {

/// exp(-i t k^2/2) psi, exact. Requires Im t <= 0.
WaveFunction free_propagate(const WaveFunction& psi, cplx t);

struct SurvivalSeries {
    std::vector<double> times;
    std::vector<cplx> amplitude;     ///< <phi, exp(-i t H0) psi>
    std::vector<double> probability;  ///< |amplitude|^2
    std::vector<std::size_t> refinement;  ///< lattice refinement factor used per time
};

/// Smallest factor r such that the refined lattice has at least 8 nodes per
/// phase period at the edge of the numerical support of conj(phi) psi.
std::size_t oscillation_refinement(const WaveFunction& phi, const WaveFunction& psi, double t);

/// <phi, exp(-i t H0) psi> by direct quadrature with the oscillation guard.
cplx survival_amplitude(const WaveFunction& phi, const WaveFunction& psi, double t);

/// Amplitudes at ascending times; throws ConfigError if times are unsorted.
/// Times needing the same refinement share one refined pair of states.
SurvivalSeries survival_series(const WaveFunction& phi, const WaveFunction& psi,
                               std::span<const double> times);

/// Steps needed so that |dt| <= max_dt and |dt| max|V| < 0.1.
std::size_t split_step_count(const PotentialSpec& v, cplx t, double max_dt = 0.05);

/// Strang splitting for exp(-i t (H0 + V)): half kinetic step, potential step
/// in position space, half kinetic step. Complex t with Im t <= 0 gives
/// imaginary-time damping. Throws ConfigError if |dt| max|V| >= 0.1.
WaveFunction split_step_propagate(const WaveFunction& psi, const PotentialSpec& v, cplx t,
                                  std::size_t steps);
WaveFunction split_step_propagate(const WaveFunction& psi, const PotentialSpec& v, cplx t);

using Propagator = std::function<WaveFunction(const WaveFunction&, cplx)>;

/// |T U(t) psi - U(t)(T + t) psi| / |psi|.
double tweakwr_residual(const OperatorAction& apply_T, const Propagator& propagate,
                        const WaveFunction& psi, cplx t);

/// |<T0>_{exp(-itH0) psi} - (<T0>_psi + t)|, pass below 1e-6 (1 + |t|).
Report heisenberg_shift_check(const WaveFunction& psi, double t);

struct RapidDecayOptions {
    double t_star = 10.0;
    double horizon = 100.0;
    double step = 0.05;
};

/// For m = 0..m_max, locates sup over [t*, horizon] of t^m |<phi, exp(-itH0) psi>|
/// and passes when it is attained at t*. Only Bump families are accepted.
Report rapid_decay_probe(const StateFamily& phi, const StateFamily& psi, int m_max, GridPtr grid,
                         const RapidDecayOptions& options = {});

struct HalfTime {
    std::optional<double> tau;  ///< empty if P stays above 1/2 on [0, horizon]
    double p_at_horizon = 0.0;
    bool horizon_caveat = false;  ///< P(horizon) >= 1/2: a later crossing is possible
};

/// Largest t in [0, horizon] with P(t) = 1/2 by scan and bisection.
HalfTime half_time(const WaveFunction& psi, double horizon, std::size_t scan_points = 4001);

}  // namespace timeop
