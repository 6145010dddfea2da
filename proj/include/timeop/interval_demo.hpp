#pragma once

#include <complex>

#include "timeop/report.hpp"

namespace timeop {

struct IntervalDemoOptions {
    int basis_modes = 64;   ///< Fourier modes kept, m in [-basis/2, basis/2)
    int tested_modes = 16;  ///< lowest |m| modes the shift relation is applied to
};

/// Momentum on L^2([0,1]) with boundary condition psi(0) = theta psi(1), in the
/// basis e_m(x) = exp(i kappa_m x), kappa_m = 2 pi m - arg(theta). Reports the
/// boundary mismatch |e^{i eps} - 1| of exp(i eps Q) e_m and the largest
/// residual of P exp(i eps Q) - exp(i eps Q)(P + eps) over the tested modes.
/// The verdict checks that the relation holds exactly when the boundary
/// condition is preserved.
Report interval_ccr_demo(std::complex<double> theta, double epsilon,
                         const IntervalDemoOptions& options = {});

}  // namespace timeop
