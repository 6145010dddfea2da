#include <doctest.h>

#include <cmath>
#include <numbers>

#include "generators.hpp"
#include "oracles.hpp"
#include "timeop/errors.hpp"
#include "timeop/lattice.hpp"
#include "timeop/wavefunction.hpp"

using namespace timeop;

TEST_CASE("half-step nodes for K=1, N=4") {
    const auto k = half_step_nodes(1.0, 4);
    REQUIRE(k.size() == 4);
    CHECK(k[0] == doctest::Approx(-0.75));
    CHECK(k[1] == doctest::Approx(-0.25));
    CHECK(k[2] == doctest::Approx(0.25));
    CHECK(k[3] == doctest::Approx(0.75));
}

TEST_CASE("build_grid rejects bad parameters") {
    CHECK_THROWS_AS(build_grid(1.0, 4), ConfigError);
    CHECK_THROWS_AS(build_grid(0.0, 64), ConfigError);
    CHECK_THROWS_AS(build_grid(-1.0, 64), ConfigError);
    CHECK_THROWS_AS(build_grid(1.0, 65), ConfigError);
    CHECK_NOTHROW(build_grid(1.0, 8));
}

TEST_CASE("grid invariants") {
    for (auto [K, N] : {std::pair{1.0, 8ul}, {32.0, 4096ul}, {7.5, 1002ul}}) {
        auto g = build_grid(K, N);
        CHECK(g->spacing() * static_cast<double>(g->size()) == doctest::Approx(2.0 * K));
        double min_abs = 1e300;
        for (std::size_t j = 0; j < N; ++j) {
            CHECK(g->node(j) != 0.0);
            CHECK(g->node(j) == -g->node(N - 1 - j));
            min_abs = std::min(min_abs, std::abs(g->node(j)));
        }
        CHECK(min_abs == doctest::Approx(g->spacing() / 2));
    }
    CHECK(build_grid(32, 4096)->spacing() == 0.015625);
}

TEST_CASE("quadrature examples") {
    auto g = build_grid(1, 64);
    std::vector<cplx> ones(64, 1.0);
    CHECK(std::abs(quadrature(*g, ones) - 2.0) < 1e-12);

    auto g16 = build_grid(16, 4096);
    std::vector<double> gauss(4096), odd(4096);
    for (std::size_t j = 0; j < 4096; ++j) {
        const double k = g16->node(j);
        gauss[j] = std::exp(-2 * k * k);
        odd[j] = k * std::exp(-k * k);
    }
    CHECK(std::abs(quadrature(*g16, gauss) - std::sqrt(std::numbers::pi / 2)) < 1e-8);
    CHECK(std::abs(quadrature(*g16, odd)) < 1e-12);

    std::vector<cplx> short_values(10);
    CHECK_THROWS_AS(quadrature(*g16, short_values), ConfigError);
}

TEST_CASE("quadrature converges at fourth order on a truncated Gaussian") {
    const double exact = oracle::gaussian_box_integral(1.0);
    std::vector<double> errs;
    for (std::size_t N : {64ul, 128ul, 256ul, 512ul}) {
        auto g = build_grid(1.0, N);
        std::vector<double> f(N);
        for (std::size_t j = 0; j < N; ++j) f[j] = std::exp(-2 * g->node(j) * g->node(j));
        errs.push_back(std::abs(quadrature(*g, f) - exact));
    }
    for (std::size_t i = 1; i < errs.size(); ++i) {
        const double order = std::log2(errs[i - 1] / errs[i]);
        CHECK(order > 3.7);
    }
}

TEST_CASE("transform round trip, Parseval and representation errors") {
    auto g = build_grid(32, 8192);
    gen::Rng rng(20261018);
    for (int trial = 0; trial < 5; ++trial) {
        const auto psi = gen::smooth_state(rng, g);
        const auto x = to_position(psi);
        CHECK(x.representation() == Representation::position);
        CHECK(std::abs(x.norm() - psi.norm()) < 1e-12 * psi.norm());
        const auto back = to_momentum(x);
        CHECK(distance(back, psi) < 1e-12 * psi.norm());
    }
    const auto psi = gen::smooth_state(rng, g);
    CHECK_THROWS_AS(to_momentum(psi), RepresentationError);
    CHECK_THROWS_AS(to_position(to_position(psi)), RepresentationError);
}

TEST_CASE("property: transform preserves inner products") {
    auto g = build_grid(32, 4096);
    gen::Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = gen::smooth_state(rng, g);
        const auto b = gen::smooth_state(rng, g);
        CHECK(std::abs(inner(to_position(a), to_position(b)) - inner(a, b)) < 1e-10);
    }
}

TEST_CASE("Gaussian maps to Gaussian with reciprocal width") {
    auto g = build_grid(32, 8192);
    const double w = 0.7, k0 = 1.3, x0 = -4.0;
    // psi(k) = exp(-(k-k0)^2 w^2/2 - i k x0) -> (1/w) exp(i k0 (x-x0) - (x-x0)^2/(2w^2))
    const auto psi = pointwise(WaveFunction(g, std::vector<cplx>(8192), Representation::momentum),
                               [&](double k, cplx) {
                                   const double u = (k - k0) * w;
                                   return std::exp(-0.5 * u * u) * std::polar(1.0, -k * x0);
                               });
    const auto x = to_position(psi);
    double worst = 0.0;
    for (std::size_t m = 0; m < x.size(); ++m) {
        const double xm = g->positions()[m];
        const double u = (xm - x0) / w;
        const cplx expect = std::polar(std::exp(-0.5 * u * u) / w, k0 * (xm - x0));
        worst = std::max(worst, std::abs(x[m] - expect));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("refinement interpolates band-limited states") {
    auto g = build_grid(16, 1024);
    gen::Rng rng(3);
    const auto psi = gen::smooth_state(rng, g);
    const auto fine = refine(psi, 3);
    CHECK(fine.size() == 3072);
    CHECK(std::abs(fine.norm() - psi.norm()) < 1e-10);
    CHECK(distance(refine(psi, 1), psi) == 0.0);
}

TEST_CASE("box sequences") {
    const auto seq = BoxSequence::doubling(16, 2048, 4);
    REQUIRE(seq.size() == 4);
    CHECK(seq.boxes()[3].first == 128.0);
    CHECK(seq.boxes()[3].second == 131072u);
    for (std::size_t i = 1; i < seq.size(); ++i) CHECK(seq.grid(i)->spacing() < seq.grid(i - 1)->spacing());
    CHECK_THROWS_AS(BoxSequence({{16, 2048}, {16, 4096}}), ConfigError);
    CHECK_THROWS_AS(BoxSequence({{16, 2048}, {32, 2048}}), ConfigError);
}
