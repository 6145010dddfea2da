#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "oracles.hpp"
#include "timeop/errors.hpp"
#include "timeop/evolution.hpp"
#include "timeop/operators.hpp"
#include "timeop/scattering.hpp"
#include "timeop/states.hpp"

using namespace timeop;

namespace {

// box length 1608, enough for 4 k_eff T with k_eff ~ 3.4 and T = 64
GridPtr scatter_grid() {
    static const auto g = build_grid(32, 16384);
    return g;
}

const PotentialSpec& barrier() {
    static const auto v = PotentialSpec::gaussian(0.1, 1.0, *scatter_grid());
    return v;
}

const PotentialSpec& well() {
    static const auto v = PotentialSpec::gaussian(-0.1, 1.0, *scatter_grid());
    return v;
}

}  // namespace

TEST_CASE("potential class flags") {
    const auto g = scatter_grid();
    CHECK(barrier().putnam_class());
    CHECK(barrier().kuroda_class());
    CHECK_FALSE(well().putnam_class());
    CHECK(well().kuroda_class());
    const auto zero = PotentialSpec::zero(*g);
    CHECK(zero.is_zero());
    CHECK(zero.putnam_class());
    // slowly decaying tail is neither integrable nor square integrable on the probe box
    const PotentialSpec coulombic("soft_coulomb", [](double x) { return 1.0 / std::sqrt(1.0 + x * x); }, *g);
    CHECK_FALSE(coulombic.putnam_class());
    CHECK_FALSE(coulombic.kuroda_class());
    CHECK(std::abs(barrier().l1_norm() - 0.1 * std::sqrt(std::numbers::pi)) < 1e-8);
}

TEST_CASE("zero potential gives the identity") {
    const auto eta = make_bump(1.0, 2.0, scatter_grid());
    const auto zero = PotentialSpec::zero(*scatter_grid());
    for (Direction d : {Direction::plus, Direction::minus}) {
        CHECK(distance(wave_operator(eta, zero, d).state, eta) < 1e-10);
        CHECK(distance(adjoint_wave_operator(eta, zero, d).state, eta) < 1e-10);
    }
    CHECK(distance(conjugated_T(eta, zero, Direction::plus), apply_T0(eta)) < 1e-10);
}

TEST_CASE("barrier wave operators converge and are isometric") {
    const auto eta = make_bump(1.0, 2.0, scatter_grid());
    WaveOperatorOptions opts;
    for (Direction d : {Direction::plus, Direction::minus}) {
        const auto u = wave_operator(eta, barrier(), d, opts);
        CHECK(u.converged);
        CHECK(u.increments.back() < opts.tol);
        CHECK(u.horizons.size() == u.increments.size() + 1);
        CHECK(std::abs(u.state.norm() - 1.0) < 1e-8);
        // the barrier scatters: U eta differs visibly from eta
        CHECK(distance(u.state, eta) > 1e-2);
        const auto back = adjoint_wave_operator(u.state, barrier(), d, opts);
        CHECK(distance(back.state, eta) < 2 * opts.tol);
    }
}

TEST_CASE("non-convergence and undersized boxes are reported") {
    const auto eta = make_bump(1.0, 2.0, scatter_grid());
    WaveOperatorOptions opts;
    opts.tol = 1e-12;
    opts.max_horizon = 4;
    CHECK_THROWS_AS(wave_operator(eta, barrier(), Direction::plus, opts), ConvergenceFailure);
    opts.throw_on_failure = false;
    const auto r = wave_operator(eta, barrier(), Direction::plus, opts);
    CHECK_FALSE(r.converged);
    CHECK(r.horizon_used == 4.0);

    const auto small = build_grid(32, 1024);
    const auto eta_small = make_bump(1.0, 2.0, small);
    const auto v_small = PotentialSpec::gaussian(0.1, 1.0, *small);
    CHECK_THROWS_AS(wave_operator(eta_small, v_small, Direction::plus), ConfigError);
}

TEST_CASE("intertwining and the conjugated weak Weyl relation in easy limits") {
    const auto eta = make_bump(0.5, 1.5, scatter_grid());
    CHECK(intertwining_check(eta, barrier(), 0.0, Direction::plus).all_pass());
    const auto zero = PotentialSpec::zero(*scatter_grid());
    for (double t : {0.0, 2.0}) {
        const auto r = t1_tweakwr_check(eta, zero, t, Direction::plus);
        CHECK(r.all_pass());
        CHECK(*r.find("residual") < 1e-6);
    }
}

TEST_CASE("intertwining at finite time") {
    const auto eta = make_bump(1.0, 2.0, scatter_grid());
    const auto r = intertwining_check(eta, barrier(), 3.0, Direction::minus);
    CHECK(r.all_pass());
}

TEST_CASE("expectation of the conjugated time operator matches the free one") {
    // <U eta, U T0 U* U eta> = <eta, T0 eta> since U is an isometry; the free
    // shift moves <T0> to -5. Faster momenta keep the graph-norm limit within T = 64.
    const auto eta = free_propagate(make_bump(2.0, 3.0, scatter_grid()), -5.0);
    const auto ueta = wave_operator(eta, barrier(), Direction::plus).state;
    const cplx lhs = inner(ueta, conjugated_T(ueta, barrier(), Direction::plus));
    const cplx rhs = inner(eta, apply_T0(eta));
    CHECK(std::abs(rhs - cplx(-5.0)) < 1e-8);
    CHECK(std::abs(lhs - rhs) < 1e-3);
}

TEST_CASE("well ground-state energy matches shooting") {
    // same box as the scattering grid, coarser momentum range
    const auto g = build_grid(8, 4096);
    const auto v = PotentialSpec::gaussian(-0.1, 1.0, *g);
    const auto ground = find_ground_state(v, g);
    REQUIRE(ground.found);
    const double exact =
        oracle::ground_energy_shooting([](double x) { return -0.1 * std::exp(-x * x); }, -0.1, 90.0, 5e-4);
    CHECK(std::abs(ground.energy - exact) < 1e-9);
    CHECK(std::abs(ground.state.norm() - 1.0) < 1e-10);
}

TEST_CASE("well bound state lies outside the range of U") {
    const auto g = scatter_grid();
    const auto ground = find_ground_state(well(), g, 1e-6);
    REQUIRE(ground.found);
    const auto eta = make_bump(1.0, 2.0, g);
    const auto ueta = wave_operator(eta, well(), Direction::plus).state;
    CHECK(std::abs(inner(ground.state, ueta)) < 1e-3);
    CHECK(range_projection_defect(ground.state, well(), Direction::plus, 32.0) > 0.5);
    CHECK(range_projection_defect(ueta, well(), Direction::plus, 32.0) < 0.05);
}

TEST_CASE("no bound state above a barrier") {
    const auto r = find_ground_state(barrier(), scatter_grid(), 1e-8, 200);
    CHECK_FALSE(r.found);
}
