// types.hpp — bath modes, discretized spectra, thermal parameters, decay results.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dephasim {

using cplx = std::complex<double>;

// Log arguments below this are treated as complete dephasing (rate sentinel +inf,
// coherence exactly 0). Below double precision there is nothing left to resolve.
inline constexpr double kCompleteDephasingFloor = 1e-30;

// One bath mode: angular frequency omega and coupling strength eta, hbar = 1.
// Frequencies and couplings share the same inverse-time unit.
struct BathMode {
    double omega{0.0};
    double eta{0.0};
};

inline bool mode_is_valid(const BathMode& m) {
    return std::isfinite(m.omega) && std::isfinite(m.eta) && m.omega >= 0.0 && m.eta >= 0.0;
}

// Finite list of modes sorted by omega ascending. Both bath engines and the
// master-equation formulas run off this one representation.
class DiscretizedBath {
  public:
    DiscretizedBath(std::vector<BathMode> modes, std::string label = {})
        : modes_(std::move(modes)), label_(std::move(label)) {
        if (modes_.empty()) throw std::invalid_argument("DiscretizedBath: empty mode list");
        for (const BathMode& m : modes_) {
            if (!mode_is_valid(m))
                throw std::invalid_argument("DiscretizedBath: negative or non-finite mode entry");
        }
        const bool sorted = std::is_sorted(modes_.begin(), modes_.end(),
                                           [](const BathMode& a, const BathMode& b) { return a.omega < b.omega; });
        if (!sorted) throw std::invalid_argument("DiscretizedBath: modes not sorted by omega");
    }

    const std::vector<BathMode>& modes() const { return modes_; }
    const std::string& label() const { return label_; }
    std::size_t size() const { return modes_.size(); }

    // Sum of eta_k^2, the total coupling weight of the spectrum.
    double total_weight() const {
        double w = 0.0;
        for (const BathMode& m : modes_) w += m.eta * m.eta;
        return w;
    }

  private:
    std::vector<BathMode> modes_;
    std::string label_;
};

// Inverse temperature. beta = +infinity is the zero-temperature case and is a
// first-class value: coth -> 1 and excited populations -> 0 exactly, with no
// large-float workarounds anywhere downstream.
struct ThermalParams {
    double beta{std::numeric_limits<double>::infinity()};

    static ThermalParams zero_temperature() { return {std::numeric_limits<double>::infinity()}; }
    static ThermalParams inverse_temperature(double beta) {
        if (!(beta > 0.0)) throw std::invalid_argument("ThermalParams: beta must be > 0");
        return {beta};
    }

    bool zero_temp() const { return std::isinf(beta); }
};

// Excited-state population of a bath spin with level splitting 2*omega:
// p = exp(-beta*omega) / (2 cosh(beta*omega)), evaluated as 1/(1 + exp(2*beta*omega)).
// The rearranged form cannot overflow; p lies in [0, 1/2].
inline double thermal_population(const BathMode& m, const ThermalParams& thermal) {
    if (thermal.zero_temp()) return m.omega == 0.0 ? 0.5 : 0.0;
    return 1.0 / (1.0 + std::exp(2.0 * thermal.beta * m.omega));
}

// coth(beta*omega), the thermal weight in the native rate convention. 1 at beta = inf.
inline double coth_beta_omega(const ThermalParams& thermal, double omega) {
    if (thermal.zero_temp()) return 1.0;
    return 1.0 / std::tanh(thermal.beta * omega);
}

// coth(beta*omega/2), the thermal weight of the standard displacement convention.
inline double coth_half_beta_omega(const ThermalParams& thermal, double omega) {
    if (thermal.zero_temp()) return 1.0;
    return 1.0 / std::tanh(0.5 * thermal.beta * omega);
}

// Time grid with decay rate Gamma(t) and coherence C(t) = |rho+-(t)/rho+-(0)|.
// Complete dephasing is represented by the +inf rate sentinel paired with C = 0;
// downstream arithmetic always works with C, never with Gamma, so the sentinel
// never enters a difference.
struct DephasingResult {
    std::vector<double> times;
    std::vector<double> gamma;
    std::vector<double> coherence;
};

// Uniform grid 0..t_max with `samples` points (t_max > 0, samples >= 2).
inline std::vector<double> uniform_time_grid(double t_max, std::size_t samples) {
    if (!(t_max > 0.0)) throw std::invalid_argument("uniform_time_grid: t_max must be > 0");
    if (samples < 2) throw std::invalid_argument("uniform_time_grid: need at least 2 samples");
    std::vector<double> t(samples);
    for (std::size_t i = 0; i < samples; ++i) t[i] = t_max * double(i) / double(samples - 1);
    return t;
}

// Assemble a DephasingResult from decay exponents E(t) = t * Gamma(t).
// An exponent of +inf marks complete dephasing.
inline DephasingResult dephasing_from_exponents(std::vector<double> times, const std::vector<double>& exponents) {
    if (times.size() != exponents.size())
        throw std::invalid_argument("dephasing_from_exponents: size mismatch");
    DephasingResult r;
    r.gamma.resize(times.size());
    r.coherence.resize(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        const double e = exponents[i];
        r.gamma[i] = t > 0.0 ? e / t : 0.0;
        r.coherence[i] = std::exp(-e);  // exp(-inf) == 0
    }
    r.times = std::move(times);
    return r;
}

}  // namespace dephasim
