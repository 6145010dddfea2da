#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace timeop {

using cplx = std::complex<double>;

/// Half-step-offset nodes k_j = -K + (j + 1/2) dk, dk = 2K/N.
/// No node sits on k = 0 and the set is symmetric under k -> -k.
std::vector<double> half_step_nodes(double half_width, std::size_t count);

/// Uniform symmetric momentum lattice on [-K, K] that never samples k = 0,
/// together with the reciprocal periodic position lattice used by the
/// discrete Fourier transform (dx = pi/K, N nodes, x = 0 included).
class MomentumGrid {
public:
    MomentumGrid(double half_width, std::size_t count);

    double half_width() const { return half_width_; }
    std::size_t size() const { return nodes_.size(); }
    double spacing() const { return spacing_; }
    std::span<const double> nodes() const { return nodes_; }
    double node(std::size_t j) const { return nodes_[j]; }

    /// Quadrature weights of the order-4 end-corrected midpoint rule.
    std::span<const double> weights() const { return weights_; }

    double position_spacing() const { return position_spacing_; }
    std::span<const double> positions() const { return positions_; }
    /// Length of the periodic position box, N * dx.
    double position_extent() const { return position_spacing_ * static_cast<double>(size()); }

private:
    double half_width_;
    double spacing_;
    double position_spacing_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
    std::vector<double> positions_;
};

using GridPtr = std::shared_ptr<const MomentumGrid>;

/// Requires K > 0, N even and N >= 8; throws ConfigError otherwise.
GridPtr build_grid(double half_width, std::size_t count);

/// Integral over [-K, K] of the sampled function (order-4 rule, compensated sum).
cplx quadrature(const MomentumGrid& grid, std::span<const cplx> values);
double quadrature(const MomentumGrid& grid, std::span<const double> values);

/// A sequence of boxes with strictly growing K and strictly shrinking dk.
class BoxSequence {
public:
    explicit BoxSequence(std::vector<std::pair<double, std::size_t>> boxes);

    std::size_t size() const { return boxes_.size(); }
    const std::vector<std::pair<double, std::size_t>>& boxes() const { return boxes_; }
    GridPtr grid(std::size_t i) const;

    /// Box i doubles K and quadruples N relative to box i - 1.
    static BoxSequence doubling(double base_half_width, std::size_t base_count, std::size_t count);

private:
    std::vector<std::pair<double, std::size_t>> boxes_;
};

}  // namespace timeop
