#pragma once

// Closed forms and independent numerical integrals used as test oracles.

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace oracle {

// int_R k^{2p} e^{-b k^2} dk
inline double even_moment(int p, double b) { return std::tgamma(p + 0.5) / std::pow(b, p + 0.5); }

// int_{-c}^{c} k^{2p} e^{-b k^2} dk
inline double even_moment_truncated(int p, double b, double c) {
    return boost::math::tgamma_lower(p + 0.5, b * c * c) / std::pow(b, p + 0.5);
}

// Normalization of k^n e^{-a k^2}
inline double phi_norm_const(int n, double a) { return 1.0 / std::sqrt(even_moment(n, 2.0 * a)); }

inline double phi_n(int n, double a, double k) {
    return phi_norm_const(n, a) * std::pow(k, n) * std::exp(-a * k * k);
}

// T0 phi_n by symbolic differentiation: (i/2)((2n-1)k^{n-2} - 4a k^n) N e^{-a k^2}
inline std::complex<double> t0_phi_n(int n, double a, double k) {
    const double r = ((2 * n - 1) * std::pow(k, n - 2) - 4.0 * a * std::pow(k, n)) * phi_norm_const(n, a) *
                     std::exp(-a * k * k);
    return {0.0, 0.5 * r};
}

inline double survival_phi_n(int n, double a, double t) {
    return std::pow(1.0 + t * t / (16.0 * a * a), -n - 0.5);
}

inline double mean_h0_phi_n(int n, double a) { return (n + 0.5) / (4.0 * a); }
inline double delta_h0_phi_n(int n, double a) { return std::sqrt(n + 0.5) / (4.0 * a); }
inline double delta_t0_phi_n(int n, double a) { return 2.0 * a / std::sqrt(n - 1.5); }
inline double product_phi_n(int n) { return 0.5 * std::sqrt((n + 0.5) / (n - 1.5)); }

// t with P(t) = 1/2 for phi_n
inline double half_time_phi_n(int n, double a) {
    return 4.0 * a * std::sqrt(std::pow(2.0, 1.0 / (n + 0.5)) - 1.0);
}

// int_0^inf e^{-eps t} sin(lambda t)/t dt by Gauss-Legendre panels of half a
// period (or 1/eps if shorter), truncated where e^{-eps t} < 1e-16.
inline double f_direct(double eps, double lambda) {
    if (lambda == 0.0) return 0.0;
    const double panel = std::min(std::numbers::pi / std::abs(lambda), 1.0 / eps);
    const double end = 37.0 / eps;
    auto f = [&](double t) {
        if (t == 0.0) return lambda;
        return std::exp(-eps * t) * std::sin(lambda * t) / t;
    };
    double sum = 0.0;
    for (double a = 0.0; a < end; a += panel) {
        sum += boost::math::quadrature::gauss<double, 20>::integrate(f, a, a + panel);
    }
    return sum;
}

// int_{-K}^{K} e^{-2k^2} dk
inline double gaussian_box_integral(double K) {
    return std::sqrt(std::numbers::pi / 2.0) * std::erf(std::sqrt(2.0) * K);
}

// Even ground-state energy of -u''/2 + V u = E u by shooting from x = 0
// (u = 1, u' = 0) with RK4 out to x_max and bisecting on the sign of u(x_max).
inline double ground_energy_shooting(const std::function<double(double)>& v, double e_lo, double x_max,
                                     double h = 1e-3) {
    auto end_value = [&](double e) {
        double u = 1.0, du = 0.0;
        for (double x = 0.0; x < x_max; x += h) {
            auto acc = [&](double xx, double uu) { return 2.0 * (v(xx) - e) * uu; };
            const double k1u = du, k1d = acc(x, u);
            const double k2u = du + 0.5 * h * k1d, k2d = acc(x + 0.5 * h, u + 0.5 * h * k1u);
            const double k3u = du + 0.5 * h * k2d, k3d = acc(x + 0.5 * h, u + 0.5 * h * k2u);
            const double k4u = du + h * k3d, k4d = acc(x + h, u + h * k3u);
            u += h / 6.0 * (k1u + 2 * k2u + 2 * k3u + k4u);
            du += h / 6.0 * (k1d + 2 * k2d + 2 * k3d + k4d);
            if (u < 0.0) return -1.0;
        }
        return 1.0;
    };
    // below the eigenvalue u stays positive, above it crosses zero
    double lo = e_lo, hi = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double mid = 0.5 * (lo + hi);
        (end_value(mid) > 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace oracle
