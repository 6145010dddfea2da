#include "timeop/lattice.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "summation.hpp"
#include "timeop/errors.hpp"

namespace timeop {

std::vector<double> half_step_nodes(double half_width, std::size_t count) {
    if (!(half_width > 0.0) || count < 2 || count % 2 != 0) {
        throw ConfigError("half_step_nodes: need K > 0 and an even count >= 2");
    }
    const double dk = 2.0 * half_width / static_cast<double>(count);
    std::vector<double> nodes(count);
    // Fill the positive half and mirror it so that k_j = -k_{N-1-j} exactly.
    const std::size_t half = count / 2;
    for (std::size_t i = 0; i < half; ++i) {
        const double k = (static_cast<double>(i) + 0.5) * dk;
        nodes[half + i] = k;
        nodes[half - 1 - i] = -k;
    }
    return nodes;
}

MomentumGrid::MomentumGrid(double half_width, std::size_t count)
    : half_width_(half_width) {
    if (!(half_width > 0.0) || !std::isfinite(half_width)) {
        throw ConfigError("momentum grid: half width K must be positive, got " +
                          std::to_string(half_width));
    }
    if (count < 8 || count % 2 != 0) {
        throw ConfigError("momentum grid: node count N must be even and >= 8, got " +
                          std::to_string(count));
    }
    nodes_ = half_step_nodes(half_width, count);
    spacing_ = 2.0 * half_width / static_cast<double>(count);

    // Midpoint rule plus the h^2/24 (f'(b) - f'(a)) Euler-Maclaurin end term,
    // with f' at each end from a second-order one-sided difference.
    weights_.assign(count, spacing_);
    const double end[3] = {26.0 / 24.0, 21.0 / 24.0, 25.0 / 24.0};
    for (std::size_t i = 0; i < 3; ++i) {
        weights_[i] = end[i] * spacing_;
        weights_[count - 1 - i] = end[i] * spacing_;
    }

    position_spacing_ = std::numbers::pi / half_width;
    positions_.resize(count);
    const auto n = static_cast<std::ptrdiff_t>(count);
    for (std::ptrdiff_t m = 0; m < n; ++m) {
        positions_[static_cast<std::size_t>(m)] = static_cast<double>(m - n / 2) * position_spacing_;
    }
}

GridPtr build_grid(double half_width, std::size_t count) {
    return std::make_shared<const MomentumGrid>(half_width, count);
}

cplx quadrature(const MomentumGrid& grid, std::span<const cplx> values) {
    if (values.size() != grid.size()) {
        throw ConfigError("quadrature: sample count " + std::to_string(values.size()) +
                          " does not match grid size " + std::to_string(grid.size()));
    }
    detail::ComplexCompensatedSum sum;
    const auto w = grid.weights();
    for (std::size_t j = 0; j < values.size(); ++j) sum.add(w[j] * values[j]);
    return sum.value();
}

double quadrature(const MomentumGrid& grid, std::span<const double> values) {
    if (values.size() != grid.size()) {
        throw ConfigError("quadrature: sample count " + std::to_string(values.size()) +
                          " does not match grid size " + std::to_string(grid.size()));
    }
    detail::CompensatedSum sum;
    const auto w = grid.weights();
    for (std::size_t j = 0; j < values.size(); ++j) sum.add(w[j] * values[j]);
    return sum.value();
}

BoxSequence::BoxSequence(std::vector<std::pair<double, std::size_t>> boxes)
    : boxes_(std::move(boxes)) {
    for (std::size_t i = 1; i < boxes_.size(); ++i) {
        const auto [k_prev, n_prev] = boxes_[i - 1];
        const auto [k_cur, n_cur] = boxes_[i];
        const double dk_prev = 2.0 * k_prev / static_cast<double>(n_prev);
        const double dk_cur = 2.0 * k_cur / static_cast<double>(n_cur);
        if (!(k_cur > k_prev) || !(dk_cur < dk_prev)) {
            throw ConfigError("box sequence: each box must grow K and shrink dk");
        }
    }
}

GridPtr BoxSequence::grid(std::size_t i) const {
    return build_grid(boxes_.at(i).first, boxes_.at(i).second);
}

BoxSequence BoxSequence::doubling(double base_half_width, std::size_t base_count,
                                  std::size_t count) {
    std::vector<std::pair<double, std::size_t>> boxes;
    double k = base_half_width;
    std::size_t n = base_count;
    for (std::size_t i = 0; i < count; ++i) {
        boxes.emplace_back(k, n);
        k *= 2.0;
        n *= 4;
    }
    return BoxSequence(std::move(boxes));
}

}  // namespace timeop
