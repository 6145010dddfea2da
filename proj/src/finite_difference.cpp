#include "timeop/finite_difference.hpp"

#include <array>

#include "timeop/errors.hpp"

namespace timeop {

std::vector<double> fornberg_weights(double x0, std::span<const double> nodes, int order) {
    const int n = static_cast<int>(nodes.size());
    if (order < 0 || n <= order) throw ConfigError("fornberg_weights: need more nodes than the order");
    // c[j][k]: weight of node j for derivative k
    std::vector<std::vector<double>> c(n, std::vector<double>(order + 1, 0.0));
    double c1 = 1.0;
    double c4 = nodes[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i < n; ++i) {
        const int mn = std::min(i, order);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = nodes[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) {
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(n);
    for (int j = 0; j < n; ++j) w[j] = c[j][order];
    return w;
}

namespace {

constexpr int kWidth = 7;
constexpr int kHalf = 3;

struct EdgeStencils {
    // rows[i]: weights (unit spacing) for node i using nodes 0..6
    std::array<std::array<double, kWidth>, kHalf> rows{};

    EdgeStencils() {
        std::array<double, kWidth> x{};
        for (int j = 0; j < kWidth; ++j) x[j] = j;
        for (int i = 0; i < kHalf; ++i) {
            const auto w = fornberg_weights(i, x, 1);
            for (int j = 0; j < kWidth; ++j) rows[i][j] = w[j];
        }
    }
};

const EdgeStencils& edge_stencils() {
    static const EdgeStencils s;
    return s;
}

}  // namespace

std::vector<std::complex<double>> derivative(std::span<const std::complex<double>> f, double h) {
    const std::size_t n = f.size();
    if (n < static_cast<std::size_t>(kWidth)) throw ConfigError("derivative: need at least 7 samples");
    if (!(h > 0.0)) throw ConfigError("derivative: spacing must be positive");
    constexpr double c1 = 3.0 / 4.0, c2 = -3.0 / 20.0, c3 = 1.0 / 60.0;
    const double inv_h = 1.0 / h;
    std::vector<std::complex<double>> d(n);
    for (std::size_t i = kHalf; i + kHalf < n; ++i) {
        d[i] = (c1 * (f[i + 1] - f[i - 1]) + c2 * (f[i + 2] - f[i - 2]) + c3 * (f[i + 3] - f[i - 3])) *
               inv_h;
    }
    const auto& edge = edge_stencils();
    for (int i = 0; i < kHalf; ++i) {
        std::complex<double> lo = 0.0, hi = 0.0;
        for (int j = 0; j < kWidth; ++j) {
            lo += edge.rows[i][j] * f[j];
            // mirrored stencil: derivative flips sign under reflection
            hi -= edge.rows[i][j] * f[n - 1 - j];
        }
        d[i] = lo * inv_h;
        d[n - 1 - i] = hi * inv_h;
    }
    return d;
}

}  // namespace timeop
