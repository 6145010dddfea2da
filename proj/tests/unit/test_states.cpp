#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "oracles.hpp"
#include "timeop/errors.hpp"
#include "timeop/operators.hpp"
#include "timeop/states.hpp"

using namespace timeop;

namespace {

GridPtr default_grid() {
    static const auto g = build_grid(32, 8192);
    return g;
}

const OperatorAction T0 = [](const WaveFunction& s) { return apply_T0(s); };
const OperatorAction H0 = [](const WaveFunction& s) { return apply_H0(s); };

}  // namespace

TEST_CASE("phi_n normalization and constant") {
    const auto phi = make_phi_n(2, 1.0, default_grid());
    CHECK(std::abs(phi.norm() - 1.0) < 1e-10);
    CHECK(oracle::phi_norm_const(2, 1.0) == doctest::Approx(2.0628).epsilon(1e-4));
    // the sampled profile carries the same constant: phi_2(1) = N_2 e^{-1}
    CHECK(profile(PhiN{2, 1.0}, 1.0) == doctest::Approx(oracle::phi_n(2, 1.0, 1.0)).epsilon(1e-13));
    for (int n : {0, 3, 7, 40}) {
        for (double a : {0.5, 2.0}) {
            CHECK(profile(PhiN{n, a}, 0.8) == doctest::Approx(oracle::phi_n(n, a, 0.8)).epsilon(1e-12));
        }
    }
}

TEST_CASE("phi_n parity") {
    const auto g = default_grid();
    const auto p1 = make_phi_n(1, 1.0, g);
    const auto p2 = make_phi_n(2, 1.0, g);
    const std::size_t n = g->size();
    for (std::size_t j = 0; j < n; j += 97) {
        CHECK(p1[j] == -p1[n - 1 - j]);
        CHECK(p2[j] == p2[n - 1 - j]);
    }
}

TEST_CASE("phi_n domain coverage and parameter errors") {
    CHECK_THROWS_AS(make_phi_n(2, 1.0, build_grid(2.0, 256)), DomainCoverageError);
    CHECK_THROWS_AS(make_phi_n(-1, 1.0, default_grid()), ConfigError);
    CHECK_THROWS_AS(make_phi_n(2, 0.0, default_grid()), ConfigError);
    CHECK(phi_n_tail_mass(2, 1.0, 32.0) < 1e-300);
}

TEST_CASE("bump support and normalization") {
    const auto g = default_grid();
    const auto b = make_bump(1.0, 2.0, g);
    CHECK(std::abs(b.norm() - 1.0) < 1e-10);
    const auto tb = apply_T0(b);
    for (std::size_t j = 0; j < g->size(); ++j) {
        const double k = g->node(j);
        if (k <= 1.0 || k >= 2.0) CHECK(b[j] == cplx{});
        // the derivative stencil reaches three nodes past the support
        if (k <= 1.0 - 3 * g->spacing() || k >= 2.0 + 3 * g->spacing()) CHECK(tb[j] == cplx{});
    }
    CHECK_THROWS_AS(make_bump(-1.0, 1.0, g), ConfigError);
    CHECK_THROWS_AS(make_bump(2.0, 1.0, g), ConfigError);
    CHECK_THROWS_AS(make_bump(30.0, 40.0, g), ConfigError);
    CHECK_NOTHROW(make_bump(-2.5, -1.0, g));
}

TEST_CASE("power tail profile") {
    const auto g = default_grid();
    const auto p = make_power_tail(1.0, g);
    CHECK(std::abs(p.norm() - 1.0) < 1e-10);
    CHECK_THROWS_AS(make_power_tail(0.5, g), ConfigError);
    CHECK_THROWS_AS(make_power_tail(1.6, g), ConfigError);
    CHECK_NOTHROW(make_power_tail(1.5, g));
    // faster than any power at the origin
    for (int m = 0; m <= 8; ++m) {
        double prev = 1e300;
        for (double k : {0.2, 0.1, 0.05}) {
            const double ratio = profile(PowerTail{1.0}, k) / std::pow(k, m);
            CHECK(ratio < prev);
            prev = ratio;
        }
        CHECK(prev < 1e-100);
    }
}

TEST_CASE("moments of the free Hamiltonian and time operator on phi_2") {
    const auto phi = make_phi_n(2, 1.0, default_grid());
    const auto h = moments(H0, phi);
    CHECK(std::abs(h.mean - 0.625) < 1e-6);
    CHECK(std::abs(h.std_dev - oracle::delta_h0_phi_n(2, 1.0)) < 1e-5);
    CHECK(std::abs(expectation(T0, phi)) < 1e-8);
    CHECK(std::abs(std_dev(T0, phi) - oracle::delta_t0_phi_n(2, 1.0)) < 1e-6);
}

TEST_CASE("non-symmetric action is rejected") {
    const auto phi = make_phi_n(2, 1.0, default_grid());
    const OperatorAction times_i = [](const WaveFunction& s) { return s.scaled(cplx(0.0, 1.0)); };
    CHECK_THROWS_AS(expectation(times_i, phi), SymmetryViolation);
}

TEST_CASE("property: T0 has no eigenvectors among domain states and real states have zero mean") {
    const auto g = default_grid();
    gen::Rng rng(11);
    std::vector<WaveFunction> states;
    for (int n = 2; n <= 6; ++n) states.push_back(make_phi_n(n, rng.uniform(0.5, 2.0), g));
    for (int i = 0; i < 8; ++i) {
        const auto b = gen::bump(rng);
        states.push_back(make_bump(b.k1, b.k2, g));
    }
    for (const auto& s : states) {
        const auto m = moments(T0, s);
        CHECK(std::abs(m.mean) < 1e-8);
        CHECK(m.std_dev > 1e-6);
    }
}

TEST_CASE("constructors are deterministic") {
    const auto g = default_grid();
    CHECK(distance(make_bump(0.5, 1.5, g), make_bump(0.5, 1.5, g)) == 0.0);
    CHECK(distance(make_phi_n(4, 0.7, g), make_phi_n(4, 0.7, g)) == 0.0);
}
