#include "timeop/wavefunction.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "summation.hpp"
#include "timeop/errors.hpp"

namespace timeop {

namespace detail {

namespace {

struct PlanCache {
    std::mutex mutex;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans;

    ~PlanCache() {
        for (auto& [key, plan] : plans) fftw_destroy_plan(plan);
    }

    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard lock(mutex);
        auto it = plans.find({n, sign});
        if (it != plans.end()) return it->second;
        auto* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
        fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf,
                                          sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(buf);
        plans.emplace(std::make_pair(n, sign), plan);
        return plan;
    }
};

PlanCache& plan_cache() {
    static PlanCache cache;
    return cache;
}

}  // namespace

void dft_in_place(std::span<std::complex<double>> data, int sign) {
    fftw_plan plan = plan_cache().get(data.size(), sign);
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, ptr, ptr);
}

}  // namespace detail

std::string_view to_string(Representation rep) {
    return rep == Representation::momentum ? "momentum" : "position";
}

namespace {

double compute_norm(const MomentumGrid& grid, std::span<const cplx> amps, Representation rep) {
    detail::CompensatedSum sum;
    if (rep == Representation::momentum) {
        const auto w = grid.weights();
        for (std::size_t i = 0; i < amps.size(); ++i) sum.add(w[i] * std::norm(amps[i]));
    } else {
        for (const auto& a : amps) sum.add(std::norm(a));
        return std::sqrt(sum.value() * grid.position_spacing());
    }
    return std::sqrt(sum.value());
}

}  // namespace

WaveFunction::WaveFunction(GridPtr grid, std::vector<cplx> amplitudes, Representation rep)
    : grid_(std::move(grid)), amplitudes_(std::move(amplitudes)), rep_(rep) {
    if (!grid_) throw ConfigError("wave function: null grid");
    if (amplitudes_.size() != grid_->size()) {
        throw ConfigError("wave function: " + std::to_string(amplitudes_.size()) +
                          " amplitudes for a grid of " + std::to_string(grid_->size()));
    }
    norm_ = compute_norm(*grid_, amplitudes_, rep_);
}

std::span<const double> WaveFunction::coordinates() const {
    return rep_ == Representation::momentum ? grid_->nodes() : grid_->positions();
}

WaveFunction WaveFunction::scaled(cplx factor) const {
    std::vector<cplx> out(amplitudes_);
    for (auto& a : out) a *= factor;
    return WaveFunction(grid_, std::move(out), rep_);
}

WaveFunction WaveFunction::normalized() const {
    if (!(norm_ > 0.0)) throw ConfigError("wave function: cannot normalize a zero state");
    return scaled(1.0 / norm_);
}

void require_representation(const WaveFunction& psi, Representation rep, std::string_view operation) {
    if (psi.representation() != rep) {
        throw RepresentationError(std::string(operation) + ": expected " +
                                  std::string(to_string(rep)) + " representation, got " +
                                  std::string(to_string(psi.representation())));
    }
}

namespace {

void require_compatible(const WaveFunction& a, const WaveFunction& b, std::string_view op) {
    if (a.grid_ptr() != b.grid_ptr() && (a.grid().half_width() != b.grid().half_width() ||
                                         a.grid().size() != b.grid().size())) {
        throw ConfigError(std::string(op) + ": states live on different grids");
    }
    if (a.representation() != b.representation()) {
        throw RepresentationError(std::string(op) + ": representation mismatch");
    }
}

}  // namespace

cplx inner(const WaveFunction& a, const WaveFunction& b) {
    require_compatible(a, b, "inner");
    detail::ComplexCompensatedSum sum;
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    if (a.in_momentum()) {
        const auto w = a.grid().weights();
        for (std::size_t i = 0; i < x.size(); ++i) sum.add(w[i] * std::conj(x[i]) * y[i]);
        return sum.value();
    }
    for (std::size_t i = 0; i < x.size(); ++i) sum.add(std::conj(x[i]) * y[i]);
    return sum.value() * a.grid().position_spacing();
}

WaveFunction operator+(const WaveFunction& a, const WaveFunction& b) {
    require_compatible(a, b, "operator+");
    std::vector<cplx> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return WaveFunction(a.grid_ptr(), std::move(out), a.representation());
}

WaveFunction operator-(const WaveFunction& a, const WaveFunction& b) {
    require_compatible(a, b, "operator-");
    std::vector<cplx> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return WaveFunction(a.grid_ptr(), std::move(out), a.representation());
}

WaveFunction operator*(cplx factor, const WaveFunction& psi) { return psi.scaled(factor); }

double distance(const WaveFunction& a, const WaveFunction& b) { return (a - b).norm(); }

// With k_j = -K + (j + 1/2) dk and x_m = (m - N/2) dx, dk dx = 2 pi / N gives
// e^{i k_j x_m} = (-1)^{N/2} (-i) (-1)^{j+m} e^{i pi m / N} e^{2 pi i jm/N}.
namespace {

cplx global_phase(std::size_t n) {
    const double sign = (n / 2) % 2 == 0 ? 1.0 : -1.0;
    return cplx{0.0, -sign};
}

cplx row_phase(std::size_t m, std::size_t n) {
    const double sign = m % 2 == 0 ? 1.0 : -1.0;
    return sign * std::polar(1.0, std::numbers::pi * static_cast<double>(m) / static_cast<double>(n));
}

}  // namespace

namespace detail {

TransformFactors transform_factors(const MomentumGrid& grid) {
    const std::size_t n = grid.size();
    TransformFactors f;
    f.pre_k.resize(n);
    f.post_x.resize(n);
    f.pre_x.resize(n);
    f.post_k.resize(n);
    const cplx to_x = grid.spacing() / std::sqrt(2.0 * std::numbers::pi) * global_phase(n);
    const cplx to_k = grid.position_spacing() / std::sqrt(2.0 * std::numbers::pi) * std::conj(global_phase(n));
    for (std::size_t i = 0; i < n; ++i) {
        const double alt = i % 2 == 0 ? 1.0 : -1.0;
        const cplx row = row_phase(i, n);
        f.pre_k[i] = alt;
        f.post_x[i] = to_x * row;
        f.pre_x[i] = std::conj(row);
        f.post_k[i] = alt * to_k;
    }
    return f;
}

}  // namespace detail

WaveFunction to_position(const WaveFunction& psi) {
    require_representation(psi, Representation::momentum, "to_position");
    const auto f = detail::transform_factors(psi.grid());
    std::vector<cplx> data(psi.amplitudes().begin(), psi.amplitudes().end());
    for (std::size_t j = 0; j < data.size(); ++j) data[j] *= f.pre_k[j];
    detail::dft_in_place(data, +1);
    for (std::size_t m = 0; m < data.size(); ++m) data[m] *= f.post_x[m];
    return WaveFunction(psi.grid_ptr(), std::move(data), Representation::position);
}

WaveFunction to_momentum(const WaveFunction& psi) {
    require_representation(psi, Representation::position, "to_momentum");
    const auto f = detail::transform_factors(psi.grid());
    std::vector<cplx> data(psi.amplitudes().begin(), psi.amplitudes().end());
    for (std::size_t m = 0; m < data.size(); ++m) data[m] *= f.pre_x[m];
    detail::dft_in_place(data, -1);
    for (std::size_t j = 0; j < data.size(); ++j) data[j] *= f.post_k[j];
    return WaveFunction(psi.grid_ptr(), std::move(data), Representation::momentum);
}

WaveFunction refine(const WaveFunction& psi, std::size_t factor) {
    require_representation(psi, Representation::momentum, "refine");
    if (factor == 0) throw ConfigError("refine: factor must be >= 1");
    if (factor == 1) return psi;
    const auto& coarse = psi.grid();
    auto fine = build_grid(coarse.half_width(), coarse.size() * factor);

    // Both grids share dx = pi/K; the coarse position box sits centred in the fine one.
    const auto x_coarse = to_position(psi);
    const std::size_t n = coarse.size();
    const std::size_t offset = fine->size() / 2 - n / 2;
    std::vector<cplx> padded(fine->size(), cplx{0.0, 0.0});
    for (std::size_t m = 0; m < n; ++m) padded[offset + m] = x_coarse[m];
    return to_momentum(WaveFunction(fine, std::move(padded), Representation::position));
}

}  // namespace timeop
