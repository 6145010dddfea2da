#pragma once

#include "timeop/wavefunction.hpp"

namespace timeop {

// All actions below take and return momentum-representation states and throw
// RepresentationError otherwise.

/// Kinetic energy, multiplication by k^2 / 2.
WaveFunction apply_H0(const WaveFunction& psi);

/// Multiplication by k.
WaveFunction apply_M_k(const WaveFunction& psi);

/// Division by k (never zero on the half-step lattice).
WaveFunction apply_M_inv_k(const WaveFunction& psi);

/// d psi / dk by sixth-order finite differences.
WaveFunction apply_D_k(const WaveFunction& psi);

/// Symmetrized time operator (i/2)(d(psi/k)/dk + (1/k) dpsi/dk). No domain
/// check is made here; see domain_diagnostic.
WaveFunction apply_T0(const WaveFunction& psi);

/// Regularized dilation-type operator (f i d/dk + i d/dk f)/2 with
/// f(k) = k/(k^2 + delta^2). Reduces to apply_T0 as delta -> 0.
WaveFunction apply_A_delta(const WaveFunction& psi, double delta);

/// Multiplication by k^2/(k^2 + delta^2).
WaveFunction apply_C_delta(const WaveFunction& psi, double delta);

/// Free resolvent (k^2/2 - z)^{-1}; z must have nonzero imaginary part.
WaveFunction resolvent_H0(const WaveFunction& psi, cplx z);

}  // namespace timeop
