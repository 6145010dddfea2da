#pragma once

#include <complex>
#include <span>
#include <vector>

namespace timeop::detail {

// In-place unnormalized DFT. sign = -1: sum_j a_j e^{-2 pi i jm/N};
// sign = +1: sum_j a_j e^{+2 pi i jm/N}. Plans are cached per (N, sign).
void dft_in_place(std::span<std::complex<double>> data, int sign);

}  // namespace timeop::detail

namespace timeop {
class MomentumGrid;
}

namespace timeop::detail {

// Diagonal factors around the DFT: position = post_x * DFT(+1)(pre_k * momentum),
// momentum = post_k * DFT(-1)(pre_x * position).
struct TransformFactors {
    std::vector<std::complex<double>> pre_k, post_x, pre_x, post_k;
};

TransformFactors transform_factors(const MomentumGrid& grid);

}  // namespace timeop::detail
