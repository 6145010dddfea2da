#include "timeop/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "fft.hpp"
#include "summation.hpp"
#include "timeop/errors.hpp"
#include "timeop/operators.hpp"
#include "timeop/parallel.hpp"

namespace timeop {

namespace {

constexpr double kSupportCutoff = 1e-17;
constexpr double kNodesPerPeriod = 8.0;
constexpr double kStepBudget = 0.1;

// exp(-i t k^2 / 2). The phase is formed and reduced modulo 2 pi in extended
// precision so large phases keep their absolute accuracy.
cplx free_phase(long double k, cplx t) {
    constexpr long double two_pi = 6.283185307179586476925286766559L;
    const long double arg = std::fmod(-0.5L * static_cast<long double>(t.real()) * k * k, two_pi);
    const double damp = 0.5 * t.imag() * static_cast<double>(k * k);
    const double a = static_cast<double>(arg);
    return std::exp(damp) * cplx(std::cos(a), std::sin(a));
}

long double node_ld(const MomentumGrid& g, std::size_t j) {
    const long double K = g.half_width();
    const long double dk = 2.0L * K / static_cast<long double>(g.size());
    return -K + (static_cast<long double>(j) + 0.5L) * dk;
}

// Products conj(phi) psi with the nodes where they are numerically nonzero.
struct Integrand {
    std::vector<cplx> values;
    std::size_t lo = 0;
    std::size_t hi = 0;  // one past the last node kept
};

Integrand integrand(const WaveFunction& phi, const WaveFunction& psi) {
    Integrand f;
    const auto w = phi.grid().weights();
    f.values.resize(phi.size());
    double peak = 0.0;
    for (std::size_t j = 0; j < phi.size(); ++j) {
        f.values[j] = w[j] * std::conj(phi[j]) * psi[j];
        peak = std::max(peak, std::abs(f.values[j]));
    }
    if (peak == 0.0) return f;
    f.lo = phi.size();
    for (std::size_t j = 0; j < phi.size(); ++j) {
        if (std::abs(f.values[j]) > kSupportCutoff * peak) {
            f.lo = std::min(f.lo, j);
            f.hi = j + 1;
        }
    }
    return f;
}

cplx amplitude_on_grid(const MomentumGrid& g, const Integrand& f, double t) {
    detail::ComplexCompensatedSum sum;
    for (std::size_t j = f.lo; j < f.hi; ++j) sum.add(f.values[j] * free_phase(node_ld(g, j), t));
    return sum.value();
}

void require_pair(const WaveFunction& phi, const WaveFunction& psi, const char* op) {
    require_representation(phi, Representation::momentum, op);
    require_representation(psi, Representation::momentum, op);
    if (phi.size() != psi.size() || phi.grid().half_width() != psi.grid().half_width()) {
        throw ConfigError(std::string(op) + ": states live on different grids");
    }
}

double support_edge(const WaveFunction& phi, const WaveFunction& psi) {
    double peak = 0.0;
    for (std::size_t j = 0; j < phi.size(); ++j) peak = std::max(peak, std::abs(phi[j] * psi[j]));
    if (peak == 0.0) return 0.0;
    const auto k = phi.grid().nodes();
    double edge = 0.0;
    for (std::size_t j = 0; j < phi.size(); ++j) {
        if (std::abs(phi[j] * psi[j]) > kSupportCutoff * peak) edge = std::max(edge, std::abs(k[j]));
    }
    return edge;
}

std::size_t refinement_for(double edge, double dk, double t) {
    const double need = kNodesPerPeriod * std::abs(t) * edge * dk / (2.0 * std::numbers::pi);
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(need)));
}

}  // namespace

WaveFunction free_propagate(const WaveFunction& psi, cplx t) {
    require_representation(psi, Representation::momentum, "free_propagate");
    if (t.imag() > 0.0) throw ConfigError("free_propagate: Im t must be <= 0");
    if (t == cplx{}) return psi;
    const auto& g = psi.grid();
    std::vector<cplx> out(psi.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = free_phase(node_ld(g, j), t) * psi[j];
    return WaveFunction(psi.grid_ptr(), std::move(out), Representation::momentum);
}

std::size_t oscillation_refinement(const WaveFunction& phi, const WaveFunction& psi, double t) {
    require_pair(phi, psi, "oscillation_refinement");
    return refinement_for(support_edge(phi, psi), phi.grid().spacing(), t);
}

cplx survival_amplitude(const WaveFunction& phi, const WaveFunction& psi, double t) {
    require_pair(phi, psi, "survival_amplitude");
    const std::size_t r = oscillation_refinement(phi, psi, t);
    if (r == 1) return amplitude_on_grid(phi.grid(), integrand(phi, psi), t);
    const auto fine_phi = refine(phi, r);
    return amplitude_on_grid(fine_phi.grid(), integrand(fine_phi, refine(psi, r)), t);
}

SurvivalSeries survival_series(const WaveFunction& phi, const WaveFunction& psi,
                               std::span<const double> times) {
    require_pair(phi, psi, "survival_series");
    if (!std::is_sorted(times.begin(), times.end())) {
        throw ConfigError("survival_series: time samples must be ascending");
    }
    SurvivalSeries s;
    s.times.assign(times.begin(), times.end());
    s.amplitude.resize(times.size());
    s.probability.resize(times.size());
    s.refinement.resize(times.size());

    const double edge = support_edge(phi, psi);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < times.size(); ++i) {
        s.refinement[i] = refinement_for(edge, phi.grid().spacing(), times[i]);
        groups[s.refinement[i]].push_back(i);
    }
    for (const auto& [r, idx] : groups) {
        const WaveFunction fine_phi = r == 1 ? phi : refine(phi, r);
        const auto f = integrand(fine_phi, r == 1 ? psi : refine(psi, r));
        parallel_for(idx.size(), [&](std::size_t q) {
            const std::size_t i = idx[q];
            s.amplitude[i] = amplitude_on_grid(fine_phi.grid(), f, times[i]);
            s.probability[i] = std::norm(s.amplitude[i]);
        });
    }
    return s;
}

std::size_t split_step_count(const PotentialSpec& v, cplx t, double max_dt) {
    if (!(max_dt > 0.0)) throw ConfigError("split_step_count: max_dt must be positive");
    const double span = std::abs(t);
    double steps = std::ceil(span / max_dt);
    if (v.max_abs() > 0.0) steps = std::max(steps, std::floor(span * v.max_abs() / kStepBudget) + 1.0);
    return std::max<std::size_t>(1, static_cast<std::size_t>(steps));
}

WaveFunction split_step_propagate(const WaveFunction& psi, const PotentialSpec& v, cplx t,
                                  std::size_t steps) {
    require_representation(psi, Representation::momentum, "split_step_propagate");
    if (steps == 0) throw ConfigError("split_step_propagate: need at least one step");
    if (t.imag() > 0.0) throw ConfigError("split_step_propagate: Im t must be <= 0");
    const cplx dt = t / static_cast<double>(steps);
    if (std::abs(dt) * v.max_abs() >= kStepBudget) {
        throw ConfigError("split_step_propagate: step budget |dt| max|V| < 0.1 violated");
    }
    if (v.is_zero()) return free_propagate(psi, t);

    // Each step: kinetic factor in momentum, transform, potential kick,
    // transform back. Transform phases are folded into the diagonal factors.
    const auto& grid = psi.grid();
    const std::size_t n = grid.size();
    const auto tf = detail::transform_factors(grid);
    const auto vx = v.samples(grid);
    std::vector<cplx> into_x(n), kick(n), half(n), full(n), last(n);
    for (std::size_t i = 0; i < n; ++i) {
        const long double k = node_ld(grid, i);
        half[i] = free_phase(k, 0.5 * dt);
        full[i] = free_phase(k, dt);
        into_x[i] = tf.pre_k[i] * half[i];
        kick[i] = tf.pre_x[i] * std::exp(cplx(0.0, -1.0) * dt * vx[i]) * tf.post_x[i];
        last[i] = tf.post_k[i] * half[i];
        full[i] *= tf.post_k[i] * tf.pre_k[i];
    }
    std::vector<cplx> data(psi.amplitudes().begin(), psi.amplitudes().end());
    for (std::size_t i = 0; i < n; ++i) data[i] *= into_x[i];
    for (std::size_t s = 0; s < steps; ++s) {
        detail::dft_in_place(data, +1);
        for (std::size_t i = 0; i < n; ++i) data[i] *= kick[i];
        detail::dft_in_place(data, -1);
        const auto& mult = s + 1 == steps ? last : full;
        for (std::size_t i = 0; i < n; ++i) data[i] *= mult[i];
    }
    return WaveFunction(psi.grid_ptr(), std::move(data), Representation::momentum);
}

WaveFunction split_step_propagate(const WaveFunction& psi, const PotentialSpec& v, cplx t) {
    return split_step_propagate(psi, v, t, split_step_count(v, t));
}

double tweakwr_residual(const OperatorAction& apply_T, const Propagator& propagate,
                        const WaveFunction& psi, cplx t) {
    if (t == cplx{}) return 0.0;
    const auto lhs = apply_T(propagate(psi, t));
    const auto rhs = propagate(apply_T(psi) + t * psi, t);
    return distance(lhs, rhs) / psi.norm();
}

Report heisenberg_shift_check(const WaveFunction& psi, double t) {
    const OperatorAction T0 = [](const WaveFunction& s) { return apply_T0(s); };
    const double before = expectation(T0, psi);
    const double after = t == 0.0 ? before : expectation(T0, free_propagate(psi, t));
    const double diff = std::abs(after - (before + t));

    Report rep;
    rep.name = "heisenberg_shift";
    rep.relation = "<T0>(exp(-itH0) psi) = <T0>(psi) + t";
    rep.input("t", t);
    rep.quantity("expectation_initial", before);
    rep.quantity("expectation_evolved", after);
    rep.quantity("difference", diff);
    rep.check_le("shift residual", diff, 1e-6 * (1.0 + std::abs(t)));
    return rep;
}

Report rapid_decay_probe(const StateFamily& phi_family, const StateFamily& psi_family, int m_max,
                         GridPtr grid, const RapidDecayOptions& options) {
    if (!std::holds_alternative<Bump>(phi_family) || !std::holds_alternative<Bump>(psi_family)) {
        throw ConfigError("rapid_decay_probe: both states must be compactly supported bumps away from k = 0");
    }
    if (m_max < 0) throw ConfigError("rapid_decay_probe: m_max must be >= 0");
    if (!(options.step > 0.0) || !(options.horizon > options.t_star)) {
        throw ConfigError("rapid_decay_probe: bad time window");
    }
    const auto phi = make_state(phi_family, grid);
    const auto psi = make_state(psi_family, grid);

    const auto count = static_cast<std::size_t>(std::floor((options.horizon - options.t_star) / options.step + 1e-9)) + 1;
    std::vector<double> times(count);
    for (std::size_t i = 0; i < count; ++i) times[i] = options.t_star + options.step * static_cast<double>(i);
    const auto series = survival_series(phi, psi, times);

    Report rep;
    rep.name = "rapid_decay_probe";
    rep.relation = "sup_{t >= t*} t^m |<phi, exp(-itH0) psi>| attained at t = t*";
    rep.input("phi", describe(phi_family));
    rep.input("psi", describe(psi_family));
    rep.input("t_star", options.t_star);
    rep.input("horizon", options.horizon);
    rep.input("step", options.step);
    for (int m = 0; m <= m_max; ++m) {
        std::size_t best = 0;
        double best_val = -1.0;
        for (std::size_t i = 0; i < count; ++i) {
            const double val = std::pow(times[i], m) * std::abs(series.amplitude[i]);
            if (val > best_val) {
                best_val = val;
                best = i;
            }
        }
        const double at_start = std::pow(times[0], m) * std::abs(series.amplitude[0]);
        const double at_end = std::pow(times[count - 1], m) * std::abs(series.amplitude[count - 1]);
        const std::string tag = "m=" + std::to_string(m);
        rep.quantity(tag + " value_at_t_star", at_start);
        rep.quantity(tag + " sup", best_val);
        rep.quantity(tag + " argsup", times[best]);
        rep.quantity(tag + " value_at_horizon", at_end);
        // disjoint supports give A = 0 identically, which decays trivially
        rep.check_le(tag + " sup/value_at_t_star", best_val == 0.0 ? 0.0 : best_val / at_start, 1.0);
    }
    return rep;
}

HalfTime half_time(const WaveFunction& psi, double horizon, std::size_t scan_points) {
    if (!(horizon > 0.0)) throw ConfigError("half_time: horizon must be positive");
    if (scan_points < 3) throw ConfigError("half_time: need at least 3 scan points");
    std::vector<double> times(scan_points);
    for (std::size_t i = 0; i < scan_points; ++i) {
        times[i] = horizon * static_cast<double>(i) / static_cast<double>(scan_points - 1);
    }
    const double norm2 = psi.norm() * psi.norm();
    const auto series = survival_series(psi, psi, times);
    auto p = [&](std::size_t i) { return series.probability[i] / (norm2 * norm2); };

    HalfTime out;
    out.p_at_horizon = p(scan_points - 1);
    out.horizon_caveat = out.p_at_horizon >= 0.5;

    std::optional<std::size_t> bracket;
    for (std::size_t i = scan_points - 1; i-- > 0;) {
        if ((p(i) - 0.5) * (p(i + 1) - 0.5) <= 0.0) {
            bracket = i;
            break;
        }
    }
    if (!bracket) return out;

    auto prob = [&](double t) { return std::norm(survival_amplitude(psi, psi, t)) / (norm2 * norm2); };
    double lo = times[*bracket], hi = times[*bracket + 1];
    const bool falling = p(*bracket) >= p(*bracket + 1);
    for (int it = 0; it < 60 && hi - lo > 1e-12 * (1.0 + hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        const bool above = prob(mid) >= 0.5;
        if (above == falling) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    out.tau = 0.5 * (lo + hi);
    return out;
}

}  // namespace timeop
