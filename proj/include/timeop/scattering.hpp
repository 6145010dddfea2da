#pragma once

#include <string_view>
#include <vector>

#include "timeop/potential.hpp"
#include "timeop/report.hpp"
#include "timeop/wavefunction.hpp"

namespace timeop {

enum class Direction { plus, minus };

std::string_view to_string(Direction d);

struct WaveOperatorOptions {
    double tol = 1e-3;          ///< relative Cauchy increment that ends the horizon doubling
    double graph_tol = 1e-2;    ///< same, measured in the T0 graph norm (adjoint inside conjugated_T)
    double first_horizon = 1.0;
    double max_horizon = 64.0;
    double max_dt = 0.05;       ///< split-step size cap
    bool throw_on_failure = true;
};

struct WaveOperatorResult {
    Direction direction = Direction::plus;
    std::vector<double> horizons;    ///< |T| values evaluated
    std::vector<double> increments;  ///< |Psi(T_j) - Psi(T_{j-1})| / |psi|, one per horizon after the first
    bool converged = false;
    double horizon_used = 0.0;
    WaveFunction state;
};

/// U psi = lim exp(iTH1) exp(-iTH0) psi as T -> +inf (plus) or -inf (minus),
/// by horizon doubling. The free factor is exact, the interacting one is
/// split-step with negated time. Throws ConvergenceFailure (unless disabled)
/// when no increment drops below tol, and ConfigError when the position box is
/// shorter than 4 k_eff T_max (k_eff leaves at most tol^2 of the mass outside).
WaveOperatorResult wave_operator(const WaveFunction& psi, const PotentialSpec& v, Direction dir,
                                 const WaveOperatorOptions& options = {});

/// U* phi = lim exp(iTH0) exp(-iTH1) phi, same horizon scheme.
WaveOperatorResult adjoint_wave_operator(const WaveFunction& phi, const PotentialSpec& v, Direction dir,
                                         const WaveOperatorOptions& options = {});

/// Single finite-horizon factors, exposed for range checks.
WaveFunction wave_operator_at(const WaveFunction& psi, const PotentialSpec& v, double signed_horizon,
                              double max_dt = 0.05);
WaveFunction adjoint_wave_operator_at(const WaveFunction& phi, const PotentialSpec& v,
                                      double signed_horizon, double max_dt = 0.05);

/// U T0 U* psi. The adjoint limit is taken in the graph norm of T0
/// (tolerance graph_tol), the outer one in the plain norm.
WaveFunction conjugated_T(const WaveFunction& psi, const PotentialSpec& v, Direction dir,
                          const WaveOperatorOptions& options = {});

/// |T1 exp(-itH1) psi - exp(-itH1)(T1 + t) psi| / |psi| for psi = U eta.
/// Passes below `tolerance`; the split-step error of exp(-itH1) (step halving)
/// and the wave-operator tolerance are reported separately.
Report t1_tweakwr_check(const WaveFunction& eta, const PotentialSpec& v, double t, Direction dir,
                        const WaveOperatorOptions& options = {}, double tolerance = 1e-2);

/// |exp(-isH1) U eta - U exp(-isH0) eta| / |eta| below `tolerance`.
Report intertwining_check(const WaveFunction& eta, const PotentialSpec& v, double s, Direction dir,
                          const WaveOperatorOptions& options = {}, double tolerance = 1e-2);

/// |U_{2T} U*_T chi - chi| / |chi| at finite horizon T. Small on the range of
/// U, order one for a bound state.
double range_projection_defect(const WaveFunction& chi, const PotentialSpec& v, Direction dir,
                               double horizon, double max_dt = 0.05);

struct BoundState {
    bool found = false;  ///< energy below zero after relaxation
    double energy = 0.0;
    std::size_t iterations = 0;
    WaveFunction state;
};

/// Lowest state of H1 by imaginary-time split-step relaxation from a Gaussian.
/// Stops once |H1 psi - E psi|^2 <= energy_tol |E|; the step is halved whenever
/// the residual stalls (splitting bias), down to 1/64.
BoundState find_ground_state(const PotentialSpec& v, GridPtr grid, double energy_tol = 1e-10,
                             std::size_t max_iterations = 20000);

}  // namespace timeop
