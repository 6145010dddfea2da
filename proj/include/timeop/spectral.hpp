#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "timeop/report.hpp"
#include "timeop/wavefunction.hpp"

namespace timeop {

/// Finite union of closed real intervals. Overlapping or touching intervals
/// are merged on construction; reversed endpoints are rejected.
class BorelSet {
public:
    BorelSet() = default;
    explicit BorelSet(std::vector<std::pair<double, double>> intervals);

    const std::vector<std::pair<double, double>>& intervals() const { return intervals_; }
    double lebesgue() const { return lebesgue_; }
    bool contains(double e) const;
    bool empty() const { return intervals_.empty(); }

private:
    std::vector<std::pair<double, double>> intervals_;
    double lebesgue_ = 0.0;
};

/// |E(B) psi|^2 for the free Hamiltonian: quadrature of |psi|^2 over the
/// nodes with k^2/2 in B (indicator evaluated at node energies).
double spectral_weight_H0(const WaveFunction& psi, const BorelSet& b);

/// |E(B) psi|^2 <= |T0 psi| |psi| |B|.
Report check_ac_bound(const WaveFunction& psi, const BorelSet& b);

/// int_0^inf exp(-eps t) sin(t lambda) / t dt = sign(lambda) pi/2 - arctan(eps/|lambda|).
double f_eps_lambda(double eps, double lambda);

/// |Im <psi, (H0 - lambda - i eps)^{-1} psi>| <= pi |T0 psi| |psi|.
Report resolvent_bound_check(const WaveFunction& psi, double lambda, double eps);

/// Residuals of [T0, cos(tH0)] psi + i t sin(tH0) psi and
/// [T0, sin(tH0)] psi - i t cos(tH0) psi against 1e-6 (1 + |t|) |psi|.
Report commutator_check(const WaveFunction& psi, double t);

/// P(t) <= 4 (dT0)^2 |psi|^2 / t^2 at each nonzero sampled time.
Report survival_inequality_check(const WaveFunction& psi, std::span<const double> times);

struct Uncertainty {
    double delta_T = 0.0;
    double delta_H = 0.0;
    double product = 0.0;
};

/// Standard deviations of T0 and H0 in psi and their product.
Uncertainty uncertainty(const WaveFunction& psi);
double uncertainty_product(const WaveFunction& psi);

/// Products for phi_n, n in n_list (a0 fixed) on the given grid; verdicts:
/// strictly decreasing in n and every product above 1/2.
Report kobe_sequence(std::span<const int> n_list, double a0, GridPtr grid);

}  // namespace timeop
