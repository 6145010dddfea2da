#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "oracles.hpp"
#include "timeop/errors.hpp"
#include "timeop/evolution.hpp"
#include "timeop/operators.hpp"

using namespace timeop;

namespace {

GridPtr default_grid() {
    static const auto g = build_grid(32, 8192);
    return g;
}

const OperatorAction T0 = [](const WaveFunction& s) { return apply_T0(s); };
const Propagator free_U = [](const WaveFunction& s, cplx t) { return free_propagate(s, t); };

}  // namespace

TEST_CASE("free propagation") {
    const auto phi = make_phi_n(2, 1.0, default_grid());
    CHECK(distance(free_propagate(phi, 0.0), phi) == 0.0);
    CHECK(std::abs(free_propagate(phi, 7.3).norm() - 1.0) < 1e-12);
    const double damped = free_propagate(phi, cplx(0.0, -1.0)).norm();
    const double expect = oracle::even_moment(2, 3.0) / oracle::even_moment(2, 2.0);
    CHECK(std::abs(damped * damped - expect) < 1e-10);
    CHECK_THROWS_AS(free_propagate(phi, cplx(1.0, 0.1)), ConfigError);
}

TEST_CASE("property: free propagation composes") {
    gen::Rng rng(99);
    for (int i = 0; i < 10; ++i) {
        const auto psi = gen::smooth_state(rng, default_grid());
        const double s = rng.uniform(-5, 5), t = rng.uniform(-5, 5);
        CHECK(distance(free_propagate(free_propagate(psi, s), t), free_propagate(psi, s + t)) <
              1e-12 * psi.norm());
    }
}

TEST_CASE("survival examples") {
    const auto g = default_grid();
    const auto p2 = make_phi_n(2, 1.0, g);
    const auto p5 = make_phi_n(5, 1.0, g);
    const std::vector<double> times{0.0, 0.5, 1.0, 4.0, 10.0, 40.0};
    const auto s2 = survival_series(p2, p2, times);
    const auto s5 = survival_series(p5, p5, times);
    CHECK(std::abs(s2.probability[0] - 1.0) < 1e-10);
    CHECK(std::abs(s2.probability[3] - std::pow(2.0, -2.5)) < 1e-6);
    for (std::size_t i = 1; i < times.size(); ++i) CHECK(s5.probability[i] / s2.probability[i] < 1.0);
    for (double p : s2.probability) CHECK(p <= 1.0 + 1e-10);
    const std::vector<double> unsorted{1.0, 0.5};
    CHECK_THROWS_AS(survival_series(p2, p2, unsorted), ConfigError);
    CHECK(oscillation_refinement(p2, p2, 0.0) == 1);
    CHECK(oscillation_refinement(p2, p2, 100.0) > 1);
}

TEST_CASE("survival matches the closed form across refinements") {
    const auto g = default_grid();
    for (int n : {2, 4}) {
        const auto p = make_phi_n(n, 0.5, g);
        std::vector<double> times;
        for (int i = 0; i <= 50; ++i) times.push_back(1.0 * i);
        const auto s = survival_series(p, p, times);
        for (std::size_t i = 0; i < times.size(); ++i) {
            const double exact = oracle::survival_phi_n(n, 0.5, times[i]);
            CHECK(std::abs(s.probability[i] - exact) / exact < 1e-6);
            CHECK(std::abs(survival_amplitude(p, p, times[i]) - s.amplitude[i]) < 1e-15);
        }
    }
}

TEST_CASE("property: weak decay below 0.01 within the horizon") {
    const auto g = default_grid();
    gen::Rng rng(2026);
    std::vector<double> times;
    for (int i = 0; i <= 400; ++i) times.push_back(0.25 * i);
    std::vector<WaveFunction> states{make_phi_n(2, 1.0, g), make_phi_n(6, 0.5, g)};
    for (int i = 0; i < 3; ++i) {
        const auto b = gen::bump(rng);
        states.push_back(make_bump(b.k1, b.k2, g));
    }
    for (const auto& s : states) {
        const auto series = survival_series(s, s, times);
        std::size_t last_above = 0;
        for (std::size_t i = 0; i < times.size(); ++i) {
            if (series.probability[i] >= 0.01) last_above = i;
        }
        CHECK(last_above + 1 < times.size());
    }
}

TEST_CASE("split-step propagation") {
    const auto g = default_grid();
    const auto psi = make_phi_n(0, 0.5, g);
    const auto zero = PotentialSpec::zero(*g);
    CHECK(distance(split_step_propagate(psi, zero, 3.0, 10), free_propagate(psi, 3.0)) < 1e-10);

    const auto barrier = PotentialSpec::gaussian(0.5, 1.0, *g);
    const auto long_run = split_step_propagate(make_bump(1, 2, g), barrier, 50.0);
    CHECK(std::abs(long_run.norm() - 1.0) < 1e-8);

    // self-convergence: halving dt divides the error by about 4
    const auto ref = split_step_propagate(psi, barrier, 2.0, 640);
    const double e1 = distance(split_step_propagate(psi, barrier, 2.0, 20), ref);
    const double e2 = distance(split_step_propagate(psi, barrier, 2.0, 40), ref);
    CHECK(std::log2(e1 / e2) == doctest::Approx(2.0).epsilon(0.1));

    CHECK_THROWS_AS(split_step_propagate(psi, barrier, 2.0, 5), ConfigError);
    CHECK(split_step_count(barrier, 2.0) * 0.1 > 2.0 * barrier.max_abs());
}

TEST_CASE("weak Weyl residual and Heisenberg shift") {
    const auto g = default_grid();
    const auto b = make_bump(1, 2, g);
    CHECK(tweakwr_residual(T0, free_U, b, 0.0) == 0.0);
    for (cplx t : {cplx(1), cplx(-3), cplx(1, -0.5)}) CHECK(tweakwr_residual(T0, free_U, b, t) < 1e-6);

    CHECK(heisenberg_shift_check(b, 5.0).all_pass());
    const auto zero_shift = heisenberg_shift_check(b, 0.0);
    CHECK(*zero_shift.find("difference") == 0.0);
    CHECK(heisenberg_shift_check(make_phi_n(2, 1.0, g), -2.0).all_pass());
}

TEST_CASE("rapid decay probe") {
    const auto g = default_grid();
    CHECK_THROWS_AS(rapid_decay_probe(PhiN{2, 1.0}, Bump{1, 2}, 2, g), ConfigError);
    const auto rep = rapid_decay_probe(Bump{1, 2}, Bump{1, 2}, 3, g);
    CHECK(rep.verdicts.size() == 4);
    CHECK(rep.all_pass());
    CHECK(*rep.find("m=3 value_at_horizon") < 1e-3 * *rep.find("m=3 value_at_t_star"));
}

TEST_CASE("half time") {
    const auto g = default_grid();
    const auto phi = make_phi_n(2, 1.0, g);
    const auto h = half_time(phi, 100.0);
    REQUIRE(h.tau.has_value());
    CHECK(std::abs(*h.tau - oracle::half_time_phi_n(2, 1.0)) < 1e-4);
    CHECK_FALSE(h.horizon_caveat);
    CHECK(2 * std::sqrt(2.0) * std_dev(T0, phi) == doctest::Approx(8.0).epsilon(1e-6));
    const auto short_horizon = half_time(phi, 1.0);
    CHECK_FALSE(short_horizon.tau.has_value());
    CHECK(short_horizon.horizon_caveat);
}
