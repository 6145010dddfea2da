#include "timeop/operators.hpp"

#include "timeop/errors.hpp"
#include "timeop/finite_difference.hpp"

namespace timeop {

namespace {

WaveFunction with_amplitudes(const WaveFunction& like, std::vector<cplx> amps) {
    return WaveFunction(like.grid_ptr(), std::move(amps), Representation::momentum);
}

std::vector<cplx> d_dk(const WaveFunction& psi) {
    return derivative(psi.amplitudes(), psi.grid().spacing());
}

void require_delta(double delta) {
    if (!(delta > 0.0)) throw ConfigError("regularization parameter delta must be positive");
}

}  // namespace

WaveFunction apply_H0(const WaveFunction& psi) {
    require_representation(psi, Representation::momentum, "apply_H0");
    return pointwise(psi, [](double k, cplx a) { return 0.5 * k * k * a; });
}

WaveFunction apply_M_k(const WaveFunction& psi) {
    require_representation(psi, Representation::momentum, "apply_M_k");
    return pointwise(psi, [](double k, cplx a) { return k * a; });
}

WaveFunction apply_M_inv_k(const WaveFunction& psi) {
    require_representation(psi, Representation::momentum, "apply_M_inv_k");
    return pointwise(psi, [](double k, cplx a) { return a / k; });
}

WaveFunction apply_D_k(const WaveFunction& psi) {
    require_representation(psi, Representation::momentum, "apply_D_k");
    return with_amplitudes(psi, d_dk(psi));
}

WaveFunction apply_T0(const WaveFunction& psi) {
    require_representation(psi, Representation::momentum, "apply_T0");
    const auto k = psi.grid().nodes();
    const std::size_t n = psi.size();
    std::vector<cplx> over_k(n);
    for (std::size_t j = 0; j < n; ++j) over_k[j] = psi[j] / k[j];
    const auto d_over_k = derivative(over_k, psi.grid().spacing());
    const auto d_psi = d_dk(psi);
    const cplx half_i(0.0, 0.5);
    std::vector<cplx> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = half_i * (d_over_k[j] + d_psi[j] / k[j]);
    return with_amplitudes(psi, std::move(out));
}

WaveFunction apply_A_delta(const WaveFunction& psi, double delta) {
    require_representation(psi, Representation::momentum, "apply_A_delta");
    require_delta(delta);
    const auto k = psi.grid().nodes();
    const std::size_t n = psi.size();
    const double d2 = delta * delta;
    std::vector<double> f(n);
    std::vector<cplx> f_psi(n);
    for (std::size_t j = 0; j < n; ++j) {
        f[j] = k[j] / (k[j] * k[j] + d2);
        f_psi[j] = f[j] * psi[j];
    }
    const auto d_f_psi = derivative(f_psi, psi.grid().spacing());
    const auto d_psi = d_dk(psi);
    const cplx half_i(0.0, 0.5);
    std::vector<cplx> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = half_i * (f[j] * d_psi[j] + d_f_psi[j]);
    return with_amplitudes(psi, std::move(out));
}

WaveFunction apply_C_delta(const WaveFunction& psi, double delta) {
    require_representation(psi, Representation::momentum, "apply_C_delta");
    require_delta(delta);
    const double d2 = delta * delta;
    return pointwise(psi, [d2](double k, cplx a) { return k * k / (k * k + d2) * a; });
}

WaveFunction resolvent_H0(const WaveFunction& psi, cplx z) {
    require_representation(psi, Representation::momentum, "resolvent_H0");
    if (z.imag() == 0.0) throw ConfigError("resolvent_H0: z must be off the real axis");
    return pointwise(psi, [z](double k, cplx a) { return a / (0.5 * k * k - z); });
}

}  // namespace timeop
