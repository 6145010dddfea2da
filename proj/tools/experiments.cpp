#include "experiments.hpp"

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "timeop/domain.hpp"
#include "timeop/errors.hpp"
#include "timeop/evolution.hpp"
#include "timeop/interval_demo.hpp"
#include "timeop/operators.hpp"
#include "timeop/scattering.hpp"
#include "timeop/spectral.hpp"
#include "timeop/states.hpp"

namespace timeop::cli {

namespace {

class Csv {
public:
    explicit Csv(std::vector<std::string> header) : columns_(header.size()) { row_strings(header); }

    Csv& add(const std::string& s) {
        cells_.push_back(s);
        return *this;
    }
    Csv& add(double v) { return add(format_double(v)); }
    Csv& add(std::size_t v) { return add(std::to_string(v)); }
    Csv& add(int v) { return add(std::to_string(v)); }
    Csv& add(bool v) { return add(std::string(v ? "1" : "0")); }
    void end_row() {
        if (cells_.size() != columns_) throw std::logic_error("csv: wrong column count");
        row_strings(cells_);
        cells_.clear();
    }
    std::string text() const { return out_.str(); }

private:
    void row_strings(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
        out_ << '\n';
    }

    std::size_t columns_;
    std::vector<std::string> cells_;
    std::ostringstream out_;
};

struct Output {
    Csv csv;
    std::vector<Report> reports;
};

using Experiment = std::function<Output(const ExperimentConfig&)>;

std::vector<double> log_times(double lo, double hi, std::size_t count) {
    std::vector<double> t(count);
    for (std::size_t i = 0; i < count; ++i) {
        t[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(count - 1));
    }
    return t;
}

struct Named {
    std::string id;
    StateFamily family;
};

std::vector<Named> domain_states(const ExperimentConfig& c) {
    std::vector<Named> s;
    for (int n = 2; n <= 6; ++n) s.push_back({describe(PhiN{n, c.a0}), PhiN{n, c.a0}});
    for (const auto& [a, b] : c.bumps) s.push_back({describe(Bump{a, b}), Bump{a, b}});
    return s;
}

std::vector<Named> bump_states(const ExperimentConfig& c) {
    std::vector<Named> s;
    for (const auto& [a, b] : c.bumps) s.push_back({describe(Bump{a, b}), Bump{a, b}});
    return s;
}

const OperatorAction T0_action = [](const WaveFunction& s) { return apply_T0(s); };

// survival: closed form on phi_n, survival inequality on all
// domain states, rapid-decay probe on bump pairs.
// CSV: state,t,probability,closed_form,bound
Output survival(const ExperimentConfig& c) {
    Output o{Csv({"state", "t", "probability", "closed_form", "bound"}), {}};
    const auto grid = build_grid(c.grid_K, c.grid_N);
    auto times = log_times(c.t_min, c.horizon, c.t_samples);
    times.insert(times.begin(), 0.0);

    Report closed;
    closed.name = "survival_closed_form";
    closed.relation = "P_phi_n(t) = (1 + t^2/(16 a0^2))^(-n-1/2)";
    closed.input("a0", c.a0);
    double worst = 0.0;
    for (const auto& st : domain_states(c)) {
        const auto psi = make_state(st.family, grid);
        const auto series = survival_series(psi, psi, times);
        const double dT = std_dev(T0_action, psi);
        const auto* phi = std::get_if<PhiN>(&st.family);
        for (std::size_t i = 0; i < times.size(); ++i) {
            const double t = times[i];
            o.csv.add(st.id).add(t).add(series.probability[i]);
            if (phi) {
                const double exact = std::pow(1.0 + t * t / (16.0 * phi->a0 * phi->a0), -phi->n - 0.5);
                worst = std::max(worst, std::abs(series.probability[i] - exact) / exact);
                o.csv.add(exact);
            } else {
                o.csv.add(std::string());
            }
            o.csv.add(t == 0.0 ? std::string("inf") : format_double(4.0 * dT * dT / (t * t)));
            o.csv.end_row();
        }
        auto ineq = survival_inequality_check(psi, times);
        ineq.input("state", st.id);
        o.reports.push_back(std::move(ineq));
    }
    closed.quantity("max_relative_error", worst);
    closed.check_le("max relative error", worst, 1e-6);
    o.reports.insert(o.reports.begin(), std::move(closed));

    const auto bumps = bump_states(c);
    for (std::size_t i = 0; i < bumps.size(); ++i) {
        for (std::size_t j = i; j < bumps.size(); ++j) {
            o.reports.push_back(rapid_decay_probe(bumps[i].family, bumps[j].family, 4, grid));
        }
    }
    return o;
}

// uncertainty: products and half-times.
// CSV: state,delta_T,delta_H,product,product_closed_form,tau_h,tau_bound,horizon_caveat
Output uncertainty_table(const ExperimentConfig& c) {
    Output o{Csv({"state", "delta_T", "delta_H", "product", "product_closed_form", "tau_h", "tau_bound",
                  "horizon_caveat"}),
             {}};
    const auto grid = build_grid(c.grid_K, c.grid_N);
    o.reports.push_back(kobe_sequence(c.n_list, c.a0, grid));

    std::vector<Named> states;
    for (int n : c.n_list) states.push_back({describe(PhiN{n, c.a0}), PhiN{n, c.a0}});
    for (auto& b : bump_states(c)) states.push_back(std::move(b));

    Report half;
    half.name = "half_time_bound";
    half.relation = "tau_h(psi) <= 2 sqrt(2) dT0(psi)";
    half.input("horizon", c.horizon);
    for (const auto& st : states) {
        const auto psi = make_state(st.family, grid);
        const auto u = uncertainty(psi);
        const auto h = half_time(psi, c.horizon);
        const double bound = 2.0 * std::sqrt(2.0) * u.delta_T;
        o.csv.add(st.id).add(u.delta_T).add(u.delta_H).add(u.product);
        if (const auto* phi = std::get_if<PhiN>(&st.family)) {
            o.csv.add(0.5 * std::sqrt((phi->n + 0.5) / (phi->n - 1.5)));
        } else {
            o.csv.add(std::string());
        }
        o.csv.add(h.tau ? format_double(*h.tau) : std::string()).add(bound).add(h.horizon_caveat);
        o.csv.end_row();
        if (h.tau) {
            half.quantity(st.id + " tau_h", *h.tau);
            half.check_le(st.id + " tau_h vs bound", *h.tau, bound);
        } else {
            half.check(st.id + " half time found within horizon", false);
        }
    }
    o.reports.push_back(std::move(half));
    return o;
}

// bounds: absolute-continuity and resolvent bounds, f(eps, lambda) table.
// CSV: kind,state,a,b,measured,bound,pass
Output bounds(const ExperimentConfig& c) {
    Output o{Csv({"kind", "state", "a", "b", "measured", "bound", "pass"}), {}};
    const auto grid = build_grid(c.grid_K, c.grid_N);

    std::mt19937_64 rng(c.seed);
    auto uniform = [&](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    };
    std::vector<std::pair<double, double>> intervals;
    for (std::size_t i = 0; i < c.intervals; ++i) {
        const double a = uniform(0.0, 50.0);
        intervals.emplace_back(a, a + uniform(0.0, 50.0 - a));
    }
    for (int i = 0; i < 5; ++i) {
        const double e = uniform(0.0, 50.0);
        intervals.emplace_back(e, e);
    }

    Report ac;
    ac.name = "ac_bound_sweep";
    ac.relation = "|E(B) psi|^2 <= |T0 psi| |psi| |B|";
    ac.seed = c.seed;
    ac.input("intervals", std::to_string(c.intervals));
    Report res;
    res.name = "resolvent_bound_sweep";
    res.relation = "|Im <psi, R0(lambda + i eps) psi>| <= pi |T0 psi| |psi|";
    std::size_t ac_fail = 0, res_fail = 0;
    double point_weight = 0.0;
    for (const auto& st : domain_states(c)) {
        const auto psi = make_state(st.family, grid);
        for (const auto& iv : intervals) {
            const auto r = check_ac_bound(psi, BorelSet({iv}));
            const double w = *r.find("spectral_weight");
            if (iv.first == iv.second) point_weight = std::max(point_weight, w);
            ac_fail += r.all_pass() ? 0 : 1;
            o.csv.add(std::string("ac")).add(st.id).add(iv.first).add(iv.second).add(w).add(*r.find("bound"));
            o.csv.add(r.all_pass());
            o.csv.end_row();
        }
        for (double lambda = 0.0; lambda <= 20.0; lambda += 1.0) {
            for (double eps : {1.0, 0.1, 0.01}) {
                const auto r = resolvent_bound_check(psi, lambda, eps);
                res_fail += r.all_pass() ? 0 : 1;
                o.csv.add(std::string("resolvent")).add(st.id).add(lambda).add(eps);
                o.csv.add(*r.find("im_resolvent")).add(*r.find("bound")).add(r.all_pass());
                o.csv.end_row();
            }
        }
    }
    ac.check_le("violations", static_cast<double>(ac_fail), 0.0);
    ac.check_le("weight on zero-length intervals", point_weight, 1e-6);
    res.check_le("violations", static_cast<double>(res_fail), 0.0);

    Report f;
    f.name = "f_eps_lambda";
    f.relation = "|int_0^inf e^(-eps t) sin(lambda t)/t dt| <= pi/2";
    double fmax = 0.0;
    for (double eps : {0.01, 0.1, 1.0, 10.0}) {
        for (double lambda = -20.0; lambda <= 20.0; lambda += 1.0) {
            const double v = f_eps_lambda(eps, lambda);
            fmax = std::max(fmax, std::abs(v));
            o.csv.add(std::string("f")).add(std::string()).add(eps).add(lambda).add(v).add(std::numbers::pi / 2);
            o.csv.add(std::abs(v) <= std::numbers::pi / 2);
            o.csv.end_row();
        }
    }
    f.check_le("max |f|", fmax, std::numbers::pi / 2);
    o.reports.push_back(std::move(ac));
    o.reports.push_back(std::move(res));
    o.reports.push_back(std::move(f));
    return o;
}

// weylrel: weak Weyl residuals, Heisenberg shift, commutator identities on bumps.
// CSV: check,state,t_re,t_im,residual,tolerance,pass
Output weylrel(const ExperimentConfig& c) {
    Output o{Csv({"check", "state", "t_re", "t_im", "residual", "tolerance", "pass"}), {}};
    const auto grid = build_grid(c.grid_K, c.grid_N);
    const Propagator U = [](const WaveFunction& s, cplx t) { return free_propagate(s, t); };
    Report wr;
    wr.name = "t_weak_weyl";
    wr.relation = "T0 exp(-itH0) psi = exp(-itH0)(T0 + t) psi, Im t <= 0";
    for (const auto& st : bump_states(c)) {
        const auto psi = make_state(st.family, grid);
        for (cplx t : {cplx(1), cplx(-1), cplx(3), cplx(-3), cplx(1, -0.5)}) {
            const double r = tweakwr_residual(T0_action, U, psi, t);
            const bool ok = wr.check_le(st.id + " t=" + format_double(t.real()) + (t.imag() ? "-0.5i" : ""), r, 1e-6);
            o.csv.add(std::string("weak_weyl")).add(st.id).add(t.real()).add(t.imag()).add(r).add(1e-6).add(ok);
            o.csv.end_row();
        }
        for (double t : {-3.0, -1.0, 1.0, 3.0, 5.0}) {
            auto rep = heisenberg_shift_check(psi, t);
            rep.input("state", st.id);
            o.csv.add(std::string("heisenberg")).add(st.id).add(t).add(0.0).add(*rep.find("difference"));
            o.csv.add(rep.verdicts[0].threshold).add(rep.all_pass());
            o.csv.end_row();
            o.reports.push_back(std::move(rep));
        }
        for (double t : {0.5, 2.0, 8.0}) {
            auto rep = commutator_check(psi, t);
            rep.input("state", st.id);
            for (std::size_t k = 0; k < 2; ++k) {
                const auto& v = rep.verdicts[k];
                o.csv.add(std::string(k == 0 ? "commutator_cos" : "commutator_sin")).add(st.id).add(t).add(0.0);
                o.csv.add(v.measured).add(v.threshold).add(v.pass);
                o.csv.end_row();
            }
            o.reports.push_back(std::move(rep));
        }
    }
    o.reports.insert(o.reports.begin(), std::move(wr));
    return o;
}

// domain: verdict table over a doubling box sequence starting at (K/2, N/4).
// CSV: state,target,evolve_time,K,N,dk,estimate,verdict,exponent
Output domain(const ExperimentConfig& c) {
    Output o{Csv({"state", "target", "evolve_time", "K", "N", "dk", "estimate", "verdict", "exponent"}), {}};
    const auto boxes = BoxSequence::doubling(c.grid_K / 2.0, c.grid_N / 4, 4);
    struct Case {
        StateFamily family;
        DomainOptions options;
        bool expect_converged;
    };
    std::vector<Case> cases;
    DomainOptions ext;
    DomainOptions orig;
    orig.target = DomainTarget::original;
    DomainOptions evolved = orig;
    evolved.evolve_time = 1.0;
    cases.push_back({PhiN{0, c.a0}, ext, false});
    cases.push_back({PhiN{1, c.a0}, ext, false});
    for (const auto& st : domain_states(c)) cases.push_back({st.family, ext, true});
    cases.push_back({PowerTail{c.power_tail_s}, orig, true});
    cases.push_back({PowerTail{c.power_tail_s}, evolved, false});

    Report rep;
    rep.name = "domain_diagnostic";
    rep.relation = "psi in Dom(T) iff the estimate stays bounded as dk -> 0 and K -> inf";
    for (const auto& cs : cases) {
        const auto v = domain_diagnostic(cs.family, boxes, cs.options);
        for (const auto& s : v.steps) {
            o.csv.add(v.state_id).add(std::string(to_string(v.target))).add(v.evolve_time).add(s.half_width);
            o.csv.add(s.count).add(s.spacing).add(s.estimate).add(v.verdict()).add(v.growth_exponent);
            o.csv.end_row();
        }
        const std::string label = v.state_id + " " + std::string(to_string(v.target)) +
                                  (v.evolve_time != 0.0 ? " evolved" : "");
        rep.quantity(label + " exponent", v.growth_exponent);
        rep.check(label + (cs.expect_converged ? " converged" : " diverging"), v.converged == cs.expect_converged);
        if (!cs.expect_converged) rep.check_ge(label + " exponent positive", v.growth_exponent, 0.2);
    }
    o.reports.push_back(std::move(rep));
    return o;
}

// scatter: wave operators and conjugated time operators.
// CSV: check,direction,parameter,value,tolerance,pass
Output scatter(const ExperimentConfig& c) {
    Output o{Csv({"check", "direction", "parameter", "value", "tolerance", "pass"}), {}};
    if (c.bumps.empty()) throw ConfigError("scatter: needs at least one bump");
    const auto grid = build_grid(c.grid_K, c.scatter_N);
    const auto eta = make_state(Bump{c.bumps[0].first, c.bumps[0].second}, grid);
    const auto zero = PotentialSpec::zero(*grid);
    const auto barrier = PotentialSpec::gaussian(c.barrier, 1.0, *grid);
    const auto well = PotentialSpec::gaussian(-c.barrier, 1.0, *grid);
    WaveOperatorOptions opts;
    opts.tol = c.tol;
    auto row = [&](const std::string& check, Direction d, double param, double value, double tol, bool pass) {
        o.csv.add(check).add(std::string(to_string(d))).add(param).add(value).add(tol).add(pass);
        o.csv.end_row();
    };

    Report wo;
    wo.name = "wave_operators";
    wo.relation = "U = s-lim exp(iTH1) exp(-iTH0), U* U = 1 on Putnam-class V";
    wo.input("grid_N", std::to_string(c.scatter_N));
    wo.input("barrier", c.barrier);
    wo.check("barrier putnam class", barrier.putnam_class());
    wo.check("well not putnam class", !well.putnam_class());
    wo.check("well kuroda class", well.kuroda_class());
    const double id = distance(wave_operator(eta, zero, Direction::plus, opts).state, eta);
    wo.check_le("zero potential identity", id, 1e-10);
    row("identity", Direction::plus, 0.0, id, 1e-10, id < 1e-10);
    for (Direction d : {Direction::plus, Direction::minus}) {
        const auto u = wave_operator(eta, barrier, d, opts);
        for (std::size_t i = 0; i < u.increments.size(); ++i) {
            row("increment", d, u.horizons[i + 1], u.increments[i], c.tol, u.increments[i] < c.tol);
        }
        const std::string dir(to_string(d));
        wo.quantity("horizon_used " + dir, u.horizon_used);
        wo.check_le("last increment " + dir, u.increments.back(), c.tol);
        wo.check_le("norm change " + dir, std::abs(u.state.norm() - eta.norm()), 1e-6 + c.tol);
        const double back = distance(adjoint_wave_operator(u.state, barrier, d, opts).state, eta);
        wo.check_le("U*U - 1 " + dir, back, 2 * c.tol);
        row("adjoint_roundtrip", d, 0.0, back, 2 * c.tol, back <= 2 * c.tol);
    }
    o.reports.push_back(std::move(wo));

    auto inter = intertwining_check(eta, barrier, c.scatter_s, Direction::plus, opts);
    row("intertwining", Direction::plus, c.scatter_s, *inter.find("residual"), 1e-2, inter.all_pass());
    o.reports.push_back(std::move(inter));

    WaveOperatorOptions wide = opts;
    wide.max_horizon = c.scatter_horizon;
    auto wr = t1_tweakwr_check(eta, barrier, c.scatter_t, Direction::plus, wide);
    row("t1_weak_weyl", Direction::plus, c.scatter_t, *wr.find("residual"), 1e-2, wr.all_pass());
    o.reports.push_back(std::move(wr));

    Report bs;
    bs.name = "bound_state_range";
    bs.relation = "ran U is orthogonal to bound states of H1";
    const auto ground = find_ground_state(well, grid, 1e-6);
    bs.quantity("ground_energy", ground.energy);
    bs.check("bound state found", ground.found);
    const auto scattered = wave_operator(eta, well, Direction::plus, opts).state;
    const double overlap = std::abs(inner(ground.state, scattered));
    bs.check_le("overlap with U eta", overlap, 1e-3);
    const double defect_bound = range_projection_defect(ground.state, well, Direction::plus, 32.0);
    const double defect_scat = range_projection_defect(scattered, well, Direction::plus, 32.0);
    bs.quantity("defect bound state", defect_bound);
    bs.quantity("defect scattering state", defect_scat);
    bs.check_ge("bound state outside ran U", defect_bound, 0.5);
    row("overlap", Direction::plus, ground.energy, overlap, 1e-3, overlap <= 1e-3);
    row("range_defect_bound", Direction::plus, 32.0, defect_bound, 0.5, defect_bound >= 0.5);
    row("range_defect_scattering", Direction::plus, 32.0, defect_scat, 0.0, true);
    o.reports.push_back(std::move(bs));
    return o;
}

// demo-interval: CSV: epsilon,boundary_mismatch,shift_residual,pass
Output demo_interval(const ExperimentConfig& c) {
    Output o{Csv({"epsilon", "boundary_mismatch", "shift_residual", "pass"}), {}};
    const auto theta = std::polar(1.0, c.theta_phase);
    const double pi = std::numbers::pi;
    for (double eps : {0.0, pi / 2, pi, 3.0, 2 * pi, 4 * pi}) {
        auto rep = interval_ccr_demo(theta, eps);
        o.csv.add(eps).add(*rep.find("boundary_mismatch")).add(*rep.find("shift_residual")).add(rep.all_pass());
        o.csv.end_row();
        o.reports.push_back(std::move(rep));
    }
    return o;
}

const std::map<std::string, Experiment>& registry() {
    static const std::map<std::string, Experiment> r{
        {"survival", survival},   {"uncertainty", uncertainty_table}, {"bounds", bounds},
        {"weylrel", weylrel},     {"domain", domain},                 {"scatter", scatter},
        {"demo-interval", demo_interval},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names{"survival", "uncertainty", "bounds", "weylrel",
                                                "domain",   "scatter",     "demo-interval"};
    return names;
}

RunResult run(const std::string& subcommand, const ExperimentConfig& config, std::ostream& log) {
    RunResult result;
    const auto it = registry().find(subcommand);
    if (it == registry().end()) {
        log << "unknown subcommand '" << subcommand << "'\n";
        result.exit_code = 2;
        return result;
    }
    try {
        validate(config);
        Output out = it->second(config);
        std::filesystem::create_directories(config.out);
        const auto base = std::filesystem::path(config.out) / subcommand;
        result.csv_path = base.string() + ".csv";
        result.json_path = base.string() + ".json";
        std::ofstream(result.csv_path, std::ios::binary) << out.csv.text();

        nlohmann::ordered_json j;
        j["subcommand"] = subcommand;
        j["grid"] = {{"K", config.grid_K}, {"N", config.grid_N}};
        j["seed"] = config.seed;
        j["tol"] = config.tol;
        j["horizon"] = config.horizon;
        j["config"] = serialize(config);
        bool pass = true;
        auto& reps = j["reports"] = nlohmann::ordered_json::array();
        for (const auto& r : out.reports) {
            reps.push_back(r.to_json());
            pass = pass && r.all_pass();
        }
        j["pass"] = pass;
        std::ofstream(result.json_path, std::ios::binary) << j.dump(2) << '\n';

        for (const auto& r : out.reports) {
            for (const auto& v : r.verdicts) {
                if (!v.pass) {
                    log << "FAIL " << r.name << ": " << v.label << " measured " << format_double(v.measured)
                        << " threshold " << format_double(v.threshold) << '\n';
                }
            }
        }
        result.reports = std::move(out.reports);
        result.exit_code = pass ? 0 : 1;
    } catch (const ConfigError& e) {
        log << "configuration error: " << e.what() << '\n';
        result.exit_code = 2;
    } catch (const DomainCoverageError& e) {
        log << "configuration error: " << e.what() << '\n';
        result.exit_code = 2;
    } catch (const ConvergenceFailure& e) {
        log << "convergence error: " << e.what() << '\n';
        result.exit_code = 2;
    }
    return result;
}

}  // namespace timeop::cli
