#pragma once

// Seeded generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "timeop/states.hpp"
#include "timeop/wavefunction.hpp"

namespace gen {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [lo, hi) from the top 53 bits, identical on every platform.
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }
    int integer(int lo, int hi) { return lo + static_cast<int>(uniform(0.0, hi - lo + 1.0)); }

private:
    std::mt19937_64 engine_;
};

// Sum of three Gaussian packets with random centre, width, position shift and
// complex weight, sampled in momentum space. Decays well inside |k| < 10.
inline timeop::WaveFunction smooth_state(Rng& rng, timeop::GridPtr grid) {
    struct Packet {
        double k0, w, x0;
        std::complex<double> c;
    };
    std::vector<Packet> ps;
    for (int i = 0; i < 3; ++i) {
        ps.push_back({rng.uniform(-3, 3), rng.uniform(0.5, 1.5), rng.uniform(-20, 20),
                      {rng.uniform(-1, 1), rng.uniform(-1, 1)}});
    }
    std::vector<std::complex<double>> amps(grid->size());
    for (std::size_t j = 0; j < amps.size(); ++j) {
        const double k = grid->node(j);
        for (const auto& p : ps) {
            const double u = (k - p.k0) / p.w;
            amps[j] += p.c * std::exp(-0.5 * u * u) * std::polar(1.0, -k * p.x0);
        }
    }
    return timeop::WaveFunction(grid, std::move(amps), timeop::Representation::momentum);
}

// Bump with support inside [0.3, 4] or its mirror image.
inline timeop::Bump bump(Rng& rng) {
    const double a = rng.uniform(0.3, 2.5);
    const double b = a + rng.uniform(0.5, 1.5);
    if (rng.uniform(0, 1) < 0.5) return {-b, -a};
    return {a, b};
}

}  // namespace gen
