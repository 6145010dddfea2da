#pragma once

#include <complex>
#include <span>
#include <vector>

namespace timeop {

/// Finite-difference weights for the derivative of order `order` at x0 from
/// samples at `nodes` (Fornberg's recursion). Result has one weight per node.
std::vector<double> fornberg_weights(double x0, std::span<const double> nodes, int order);

/// First derivative of uniformly spaced samples: 7-point centered stencil
/// (sixth order) in the interior, 7-point one-sided stencils on the three
/// nodes nearest each end. Requires at least 7 samples.
std::vector<std::complex<double>> derivative(std::span<const std::complex<double>> f, double h);

}  // namespace timeop
