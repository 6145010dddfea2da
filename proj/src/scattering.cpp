#include "timeop/scattering.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "timeop/errors.hpp"
#include "timeop/evolution.hpp"
#include "timeop/operators.hpp"
#include "timeop/states.hpp"

namespace timeop {

std::string_view to_string(Direction d) { return d == Direction::plus ? "+" : "-"; }

namespace {

double sign_of(Direction d) { return d == Direction::plus ? 1.0 : -1.0; }

// Smallest |k| outside which at most tail_share of the state's mass lies.
double effective_momentum(const WaveFunction& psi, double tail_share) {
    const auto k = psi.grid().nodes();
    const auto w = psi.grid().weights();
    const std::size_t n = psi.size();
    const double budget = tail_share * psi.norm() * psi.norm();
    double tail = 0.0;
    for (std::size_t i = 0; i < n / 2; ++i) {
        tail += w[i] * std::norm(psi[i]) + w[n - 1 - i] * std::norm(psi[n - 1 - i]);
        if (tail > budget) return std::abs(k[i]);
    }
    return 0.0;
}

// Mass that could wrap around the periodic box stays below tol^2.
void require_box(const WaveFunction& psi, double horizon, double tol) {
    const double need = 4.0 * effective_momentum(psi, tol * tol) * horizon;
    if (psi.grid().position_extent() < need) {
        std::ostringstream os;
        os << "scattering: position box " << psi.grid().position_extent() << " shorter than 4 k_eff T = "
           << need;
        throw ConfigError(os.str());
    }
}

double plain_metric(const WaveFunction& d) { return d.norm(); }

// sqrt(|d|^2 + |T0 d|^2)
double graph_metric(const WaveFunction& d) {
    const double a = d.norm();
    const double b = apply_T0(d).norm();
    return std::sqrt(a * a + b * b);
}

template <class Step, class Metric>
WaveOperatorResult run_limit(const WaveFunction& psi, Direction dir, const WaveOperatorOptions& options,
                             const char* what, Step step, Metric metric, double tol) {
    require_representation(psi, Representation::momentum, what);
    if (!(options.first_horizon > 0.0) || options.max_horizon < options.first_horizon) {
        throw ConfigError(std::string(what) + ": bad horizon range");
    }
    require_box(psi, options.max_horizon, options.tol);
    WaveOperatorResult res{dir, {}, {}, false, 0.0, psi};
    const double s = sign_of(dir);
    const double scale = psi.norm() > 0.0 ? psi.norm() : 1.0;
    std::optional<WaveFunction> prev;
    for (double T = options.first_horizon; T <= options.max_horizon * (1.0 + 1e-12); T *= 2.0) {
        auto cur = step(s * T);
        res.horizons.push_back(T);
        res.horizon_used = T;
        if (prev) {
            res.increments.push_back(metric(cur - *prev) / scale);
            if (res.increments.back() < tol) {
                res.converged = true;
                res.state = std::move(cur);
                return res;
            }
        }
        prev = std::move(cur);
    }
    res.state = std::move(*prev);
    if (options.throw_on_failure) {
        std::ostringstream os;
        os << what << ": no convergence by horizon " << options.max_horizon << "; increments";
        for (double inc : res.increments) os << ' ' << inc;
        throw ConvergenceFailure(os.str());
    }
    return res;
}

}  // namespace

WaveFunction wave_operator_at(const WaveFunction& psi, const PotentialSpec& v, double signed_horizon,
                              double max_dt) {
    const auto free = free_propagate(psi, signed_horizon);
    return split_step_propagate(free, v, -signed_horizon, split_step_count(v, signed_horizon, max_dt));
}

WaveFunction adjoint_wave_operator_at(const WaveFunction& phi, const PotentialSpec& v, double signed_horizon,
                                      double max_dt) {
    const auto moved = split_step_propagate(phi, v, signed_horizon, split_step_count(v, signed_horizon, max_dt));
    return free_propagate(moved, -signed_horizon);
}

WaveOperatorResult wave_operator(const WaveFunction& psi, const PotentialSpec& v, Direction dir,
                                 const WaveOperatorOptions& options) {
    return run_limit(
        psi, dir, options, "wave_operator",
        [&](double T) { return wave_operator_at(psi, v, T, options.max_dt); }, plain_metric, options.tol);
}

WaveOperatorResult adjoint_wave_operator(const WaveFunction& phi, const PotentialSpec& v, Direction dir,
                                         const WaveOperatorOptions& options) {
    return run_limit(
        phi, dir, options, "adjoint_wave_operator",
        [&](double T) { return adjoint_wave_operator_at(phi, v, T, options.max_dt); }, plain_metric,
        options.tol);
}

WaveFunction conjugated_T(const WaveFunction& psi, const PotentialSpec& v, Direction dir,
                          const WaveOperatorOptions& options) {
    if (v.is_zero()) return apply_T0(psi);
    // T0 is unbounded, so U* psi must settle in the graph norm of T0.
    const auto back = run_limit(
        psi, dir, options, "adjoint_wave_operator",
        [&](double T) { return adjoint_wave_operator_at(psi, v, T, options.max_dt); }, graph_metric,
        options.graph_tol);
    return wave_operator(apply_T0(back.state), v, dir, options).state;
}

Report t1_tweakwr_check(const WaveFunction& eta, const PotentialSpec& v, double t, Direction dir,
                        const WaveOperatorOptions& options, double tolerance) {
    Report rep;
    rep.name = "t1_tweak_weyl";
    rep.relation = "T1 exp(-itH1) = exp(-itH1)(T1 + t), T1 = U T0 U*";
    rep.input("potential", v.name());
    rep.input("direction", std::string(to_string(dir)));
    rep.input("t", t);
    rep.input("wave_operator_tol", options.tol);
    if (t == 0.0) {
        rep.quantity("residual", 0.0);
        rep.check_le("residual", 0.0, tolerance);
        return rep;
    }
    const auto psi = wave_operator(eta, v, dir, options).state;
    const std::size_t steps = split_step_count(v, t);
    const auto evolve = [&](const WaveFunction& s) { return split_step_propagate(s, v, t, steps); };
    const auto lhs = conjugated_T(evolve(psi), v, dir, options);
    const auto rhs = evolve(conjugated_T(psi, v, dir, options) + cplx(t) * psi);
    const double residual = distance(lhs, rhs) / psi.norm();
    const double stepping = distance(evolve(psi), split_step_propagate(psi, v, t, 2 * steps)) / psi.norm();
    rep.quantity("residual", residual);
    rep.quantity("stepping_error", stepping);
    rep.check_le("residual", residual, tolerance);
    return rep;
}

Report intertwining_check(const WaveFunction& eta, const PotentialSpec& v, double s, Direction dir,
                          const WaveOperatorOptions& options, double tolerance) {
    Report rep;
    rep.name = "intertwining";
    rep.relation = "exp(-isH1) U = U exp(-isH0)";
    rep.input("potential", v.name());
    rep.input("direction", std::string(to_string(dir)));
    rep.input("s", s);
    rep.input("wave_operator_tol", options.tol);
    double residual = 0.0;
    if (s != 0.0) {
        const auto u_eta = wave_operator(eta, v, dir, options).state;
        const auto lhs = split_step_propagate(u_eta, v, s);
        const auto rhs = wave_operator(free_propagate(eta, s), v, dir, options).state;
        residual = distance(lhs, rhs) / eta.norm();
    }
    rep.quantity("residual", residual);
    rep.check_le("residual", residual, tolerance);
    return rep;
}

double range_projection_defect(const WaveFunction& chi, const PotentialSpec& v, Direction dir,
                               double horizon, double max_dt) {
    if (!(horizon > 0.0)) throw ConfigError("range_projection_defect: horizon must be positive");
    const double s = sign_of(dir);
    const auto back = adjoint_wave_operator_at(chi, v, s * horizon, max_dt);
    const auto fwd = wave_operator_at(back, v, 2.0 * s * horizon, max_dt);
    return distance(fwd, chi) / chi.norm();
}

BoundState find_ground_state(const PotentialSpec& v, GridPtr grid, double energy_tol,
                             std::size_t max_iterations) {
    BoundState out{false, 0.0, 0, make_phi_n(0, 4.0, grid)};
    if (v.is_zero()) return out;
    const OperatorAction H1 = [&v](const WaveFunction& s) { return apply_H1(s, v); };
    // |H1 psi - E psi|, squared over |E| it bounds the Rayleigh-quotient error
    auto residual = [&](const WaveFunction& s, double e) {
        const auto h = apply_H1(s, v);
        double acc = 0.0;
        for (std::size_t j = 0; j < s.size(); ++j) acc += std::norm(h[j] - e * s[j]);
        return std::sqrt(acc * grid->spacing());
    };
    double dtau = std::min(0.5, 0.09 / v.max_abs());
    double energy = expectation(H1, out.state);
    double last_r = residual(out.state, energy);
    // relax until the residual stalls, then halve the step to shrink the splitting bias
    while (out.iterations < max_iterations) {
        out.state = split_step_propagate(out.state, v, cplx(0.0, -dtau), 1).normalized();
        if (++out.iterations % 10 != 0) continue;
        energy = expectation(H1, out.state);
        const double r = residual(out.state, energy);
        const bool done = energy < 0.0 && r * r <= energy_tol * std::abs(energy);
        const bool stalled = r > 0.999 * last_r;
        last_r = r;
        if (done) break;
        if (stalled) {
            if (energy >= 0.0 || dtau < 1.0 / 64) break;
            dtau *= 0.5;
            last_r = std::numeric_limits<double>::infinity();
        }
    }
    out.energy = energy;
    out.found = energy < 0.0;
    return out;
}

}  // namespace timeop
