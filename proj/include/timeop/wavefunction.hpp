#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "timeop/lattice.hpp"

namespace timeop {

enum class Representation { momentum, position };

std::string_view to_string(Representation rep);

/// Complex amplitudes sampled on a grid, tagged with the representation they
/// live in. Values are samples of the continuous function (psi(k_j) or
/// psi(x_m)), so inner products are quadratures. Immutable after construction;
/// the norm is computed once.
class WaveFunction {
public:
    WaveFunction(GridPtr grid, std::vector<cplx> amplitudes, Representation rep);

    const MomentumGrid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    Representation representation() const { return rep_; }
    bool in_momentum() const { return rep_ == Representation::momentum; }

    std::size_t size() const { return amplitudes_.size(); }
    std::span<const cplx> amplitudes() const { return amplitudes_; }
    cplx operator[](std::size_t i) const { return amplitudes_[i]; }

    /// Momentum nodes or position nodes, matching the representation.
    std::span<const double> coordinates() const;

    double norm() const { return norm_; }

    WaveFunction scaled(cplx factor) const;
    WaveFunction normalized() const;

private:
    GridPtr grid_;
    std::vector<cplx> amplitudes_;
    Representation rep_;
    double norm_;
};

/// Throws RepresentationError naming `operation` when the tag differs.
void require_representation(const WaveFunction& psi, Representation rep, std::string_view operation);

/// <a, b>, antilinear in the first slot. Requires a shared grid and representation.
cplx inner(const WaveFunction& a, const WaveFunction& b);

WaveFunction operator+(const WaveFunction& a, const WaveFunction& b);
WaveFunction operator-(const WaveFunction& a, const WaveFunction& b);
WaveFunction operator*(cplx factor, const WaveFunction& psi);

/// |a - b|
double distance(const WaveFunction& a, const WaveFunction& b);

/// New state with amplitude f(coordinate, amplitude) at each node.
template <class F>
WaveFunction pointwise(const WaveFunction& psi, F&& f) {
    const auto coords = psi.coordinates();
    std::vector<cplx> out(psi.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(coords[i], psi[i]);
    return WaveFunction(psi.grid_ptr(), std::move(out), psi.representation());
}

/// Unitary discrete Fourier transform, psi(x) = (2 pi)^{-1/2} int e^{ikx} psi(k) dk.
WaveFunction to_position(const WaveFunction& psi);
WaveFunction to_momentum(const WaveFunction& psi);

/// Band-limited interpolation of a momentum-space state onto the grid with the
/// same K and factor * N nodes (zero padding of the position samples).
WaveFunction refine(const WaveFunction& psi, std::size_t factor);

}  // namespace timeop
