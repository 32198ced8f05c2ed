// master_eq.hpp — second-order (weak-coupling) dephasing formulas and validity checks.
//
// The spin-bath second-order result is exposed verbatim as a decay exponent,
//   E(t) = sum_k (2 eta^2/omega^2) (omega t - sin omega t),
// with coherence exp(-E(t)). Note it grows as t^3 at short times while the exact
// spin exponent is quadratic, so the weak-coupling formula undershoots early and
// overshoots late; compare-me output makes that visible rather than hiding it.
//
// The boson second-order rate is exactly the exact boson rate; the functions below
// delegate so the identity is bit-level.

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dephasim/boson_bath.hpp"
#include "dephasim/types.hpp"

namespace dephasim {

// Bath response sum Phi(lag) = sum_k eta^2 [cos(omega lag) + i <sigma_k> sin(omega lag)].
// Real part even in the lag, imaginary part odd.
inline cplx bath_response(const DiscretizedBath& bath, const std::vector<double>& mean_polarizations,
                          double lag) {
    if (mean_polarizations.size() != bath.size())
        throw std::invalid_argument("bath_response: polarization list length mismatch");
    cplx acc(0.0, 0.0);
    for (std::size_t k = 0; k < bath.size(); ++k) {
        const double p = mean_polarizations[k];
        if (!(std::abs(p) <= 1.0)) throw std::invalid_argument("bath_response: |<sigma>| must be <= 1");
        const BathMode& m = bath.modes()[k];
        acc += m.eta * m.eta * cplx(std::cos(m.omega * lag), p * std::sin(m.omega * lag));
    }
    return acc;
}

// Thermal mean polarizations <sigma_k> = 2 p_k - 1.
inline std::vector<double> thermal_polarizations(const DiscretizedBath& bath,
                                                 const ThermalParams& thermal) {
    std::vector<double> pol(bath.size());
    for (std::size_t k = 0; k < bath.size(); ++k)
        pol[k] = 2.0 * thermal_population(bath.modes()[k], thermal) - 1.0;
    return pol;
}

namespace detail {

// (u - sin u)/u^2, series branch near zero; -> 0 as u -> 0.
inline double me_time_kernel(double u) {
    if (std::abs(u) < 1e-3) {
        const double u2 = u * u;
        return u / 6.0 * (1.0 - u2 / 20.0 * (1.0 - u2 / 42.0));
    }
    return (u - std::sin(u)) / (u * u);
}

}  // namespace detail

// Free second-order spin decay exponent, temperature independent.
// A mode with omega = 0 contributes its series limit, which vanishes.
inline double gamma_me_spin_free(const DiscretizedBath& bath, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("gamma_me_spin_free: t must be >= 0");
    double expo = 0.0;
    for (const BathMode& m : bath.modes())
        expo += 2.0 * m.eta * m.eta * t * t * detail::me_time_kernel(m.omega * t);
    return expo;
}

// Second-order spin decay exponent under n periodic intervals of length tau,
// reusing the boson filter at t = n tau. The filter's genuine poles propagate
// as +inf here; nothing cancels them in this formula.
inline double gamma_me_spin_periodic(const DiscretizedBath& bath, double tau, int n) {
    if (!(tau > 0.0)) throw std::invalid_argument("gamma_me_spin_periodic: tau must be > 0");
    if (n < 1) throw std::invalid_argument("gamma_me_spin_periodic: need n >= 1");
    const double t = double(n) * tau;
    double expo = 0.0;
    for (const BathMode& m : bath.modes()) {
        const double f = boson_filter(m.omega, tau, n);
        expo += 2.0 * m.eta * m.eta * t * t * f * detail::me_time_kernel(m.omega * t);
    }
    return expo;
}

// Second-order boson rates: identical code path to the exact boson module.
inline double gamma_me_boson(const DiscretizedBath& bath, const ThermalParams& thermal, double t) {
    return gamma_boson_free(bath, thermal, t);
}

inline double gamma_me_boson(const DiscretizedBath& bath, const ThermalParams& thermal, double tau,
                             int n) {
    return gamma_boson_periodic(bath, thermal, tau, n);
}

// Weak-coupling validity of the second-order analysis: eta/omega per mode against
// the two thresholds (spin needs eta/omega << 1, boson only eta/omega <= 1).
struct ValidityReport {
    std::vector<double> ratios;  // eta/omega, +inf where omega = 0 and eta > 0
    double max_ratio{0.0};
    bool any_infinite{false};
    double spin_threshold{0.1};
    bool spin_valid{true};
    bool boson_valid{true};
};

inline ValidityReport validity_check(const DiscretizedBath& bath, double spin_threshold = 0.1) {
    ValidityReport r;
    r.spin_threshold = spin_threshold;
    r.ratios.reserve(bath.size());
    for (const BathMode& m : bath.modes()) {
        double ratio;
        if (m.omega > 0.0)
            ratio = m.eta / m.omega;
        else
            ratio = m.eta > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
        r.ratios.push_back(ratio);
        if (std::isinf(ratio)) r.any_infinite = true;
        r.max_ratio = std::max(r.max_ratio, ratio);
    }
    r.spin_valid = !r.any_infinite && r.max_ratio < spin_threshold;
    r.boson_valid = !r.any_infinite && r.max_ratio <= 1.0;
    return r;
}

}  // namespace dephasim
