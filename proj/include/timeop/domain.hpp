#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "timeop/lattice.hpp"
#include "timeop/states.hpp"

namespace timeop {

/// Which operator's domain is probed.
///  extended: the symmetric extension, estimate |T0 psi| (apply_T0).
///  original: the unextended operator (Q P^-1 + P^-1 Q)/2, estimate
///            sqrt(|psi/k|^2 + |(psi/k)'|^2 + |psi'|^2 + |psi'/k|^2),
///            finite iff both products are in L^2.
enum class DomainTarget { extended, original };

std::string_view to_string(DomainTarget target);

struct DomainStep {
    double half_width = 0.0;
    std::size_t count = 0;
    double spacing = 0.0;
    double scale = 1.0;  ///< sqrt((K/K0)(dk0/dk)); 2^b for a doubling sequence
    double estimate = 0.0;
};

struct DomainVerdict {
    std::string state_id;
    DomainTarget target = DomainTarget::extended;
    double evolve_time = 0.0;
    std::vector<DomainStep> steps;
    bool converged = false;
    double growth_exponent = 0.0;  ///< slope of log estimate vs log scale, last three boxes
    double max_increment = 0.0;    ///< largest relative change among the last three boxes

    std::string verdict() const { return converged ? "converged" : "diverging"; }
};

struct DomainOptions {
    DomainTarget target = DomainTarget::extended;
    double evolve_time = 0.0;  ///< apply exp(-i t k^2/2) to the profile first
    double cauchy_tolerance = 0.01;
    double exponent_threshold = 0.2;
};

/// Evaluates the target estimate for the (unnormalized) family profile on each
/// box. Converged iff the last three estimates change by less than the Cauchy
/// tolerance and the fitted exponent does not exceed the threshold. Needs at
/// least 3 boxes.
DomainVerdict domain_diagnostic(const StateFamily& family, const BoxSequence& boxes,
                                const DomainOptions& options = {});

}  // namespace timeop
