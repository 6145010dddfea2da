#pragma once

#include <functional>
#include <string>
#include <vector>

#include "timeop/wavefunction.hpp"

namespace timeop {

/// Real potential V(x) with class flags measured on a probe grid:
/// putnam: 0 <= V <= const and integrable; kuroda: V in L^1 and L^2.
/// Integrability is judged by the share of |V| (resp. V^2) mass in the outer
/// tenth of the probe box.
class PotentialSpec {
public:
    PotentialSpec(std::string name, std::function<double(double)> v, const MomentumGrid& probe);

    static PotentialSpec zero(const MomentumGrid& probe);
    /// amplitude * exp(-(x/width)^2); barrier for amplitude > 0, well otherwise.
    static PotentialSpec gaussian(double amplitude, double width, const MomentumGrid& probe);

    const std::string& name() const { return name_; }
    double operator()(double x) const { return v_(x); }
    std::vector<double> samples(const MomentumGrid& grid) const;

    bool putnam_class() const { return putnam_; }
    bool kuroda_class() const { return kuroda_; }
    bool is_zero() const { return max_abs_ == 0.0; }
    double max_abs() const { return max_abs_; }
    double l1_norm() const { return l1_; }
    double l2_norm() const { return l2_; }

private:
    std::string name_;
    std::function<double(double)> v_;
    bool putnam_ = false;
    bool kuroda_ = false;
    double max_abs_ = 0.0;
    double l1_ = 0.0;
    double l2_ = 0.0;
};

/// (H0 + V) psi for a momentum-representation psi.
WaveFunction apply_H1(const WaveFunction& psi, const PotentialSpec& v);

}  // namespace timeop
