// bath_spectrum.hpp — construct and discretize bath coupling spectra into mode lists.
//
// Discretization scheme: midpoints of a uniform frequency grid over the window,
// weights eta_k^2 = J(omega_k) * d_omega, renormalized so that sum eta_k^2 equals
// the requested total weight exactly. Midpoints keep omega_k > 0 even when the
// window starts at zero.

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dephasim/types.hpp"

namespace dephasim {

// Lorentzian coupling spectrum J(w) ~ W * Gamma_c / ((w - w0)^2 + Gamma_c^2) on a
// finite window, discretized into `modes` modes. 1/Gamma_c is the bath correlation time.
struct LorentzianSpectrum {
    double omega0{0.0};
    double gamma_c{1.0};
    double weight{1.0};
    double omega_lo{0.0};
    double omega_hi{10.0};
    std::size_t modes{200};

    // Window [max(0, w0 - 10 Gamma_c), w0 + 10 Gamma_c] captures over 99% of the line.
    static LorentzianSpectrum with_default_window(double omega0, double gamma_c, double weight,
                                                  std::size_t modes) {
        LorentzianSpectrum s;
        s.omega0 = omega0;
        s.gamma_c = gamma_c;
        s.weight = weight;
        s.omega_lo = std::max(0.0, omega0 - 10.0 * gamma_c);
        s.omega_hi = omega0 + 10.0 * gamma_c;
        s.modes = modes;
        return s;
    }
};

// Bath correlation time 1/Gamma_c, the Zeno/anti-Zeno reference scale.
inline double correlation_time(const LorentzianSpectrum& spec) {
    if (!(spec.gamma_c > 0.0)) throw std::invalid_argument("correlation_time: gamma_c must be > 0");
    return 1.0 / spec.gamma_c;
}

namespace detail {

// Midpoint grid + exact renormalization, shared by the spectral constructors.
template <class DensityFn>
inline DiscretizedBath modes_from_density(double omega_lo, double omega_hi, std::size_t count,
                                          double weight, DensityFn&& density, std::string label) {
    if (count < 1) throw std::invalid_argument("bath_spectrum: mode count must be >= 1");
    if (!(weight > 0.0)) throw std::invalid_argument("bath_spectrum: total weight must be > 0");
    if (!(omega_lo <= omega_hi)) throw std::invalid_argument("bath_spectrum: window must satisfy lo <= hi");
    if (omega_lo == omega_hi && count != 1)
        throw std::invalid_argument("bath_spectrum: degenerate window requires exactly one mode");

    std::vector<double> omegas(count);
    std::vector<double> raw(count);
    if (omega_lo == omega_hi) {
        omegas[0] = omega_lo;
        raw[0] = 1.0;
    } else {
        const double d_omega = (omega_hi - omega_lo) / double(count);
        for (std::size_t k = 0; k < count; ++k) {
            omegas[k] = omega_lo + (double(k) + 0.5) * d_omega;
            raw[k] = density(omegas[k]) * d_omega;
        }
    }

    double total = 0.0;
    for (double r : raw) total += r;
    if (!(total > 0.0))
        throw std::invalid_argument("bath_spectrum: window excludes all spectral weight");

    std::vector<BathMode> modes(count);
    for (std::size_t k = 0; k < count; ++k)
        modes[k] = {omegas[k], std::sqrt(weight * raw[k] / total)};
    return DiscretizedBath(std::move(modes), std::move(label));
}

}  // namespace detail

inline DiscretizedBath lorentzian_modes(const LorentzianSpectrum& spec) {
    if (!(spec.gamma_c > 0.0)) throw std::invalid_argument("lorentzian_modes: gamma_c must be > 0");
    if (!(spec.omega0 >= 0.0)) throw std::invalid_argument("lorentzian_modes: omega0 must be >= 0");
    const double w0 = spec.omega0;
    const double gc = spec.gamma_c;
    return detail::modes_from_density(
        spec.omega_lo, spec.omega_hi, spec.modes, spec.weight,
        [w0, gc](double w) { return gc / ((w - w0) * (w - w0) + gc * gc); }, "lorentzian");
}

// Power-law spectrum J(w) ~ w^(-exponent); exponent 1 is the 1/f-like case where
// the qubit couples dominantly to the lowest-frequency modes.
inline DiscretizedBath one_over_f_modes(double exponent, double omega_lo, double omega_hi,
                                        std::size_t count, double weight) {
    if (!(exponent >= 0.0)) throw std::invalid_argument("one_over_f_modes: exponent must be >= 0");
    if (!(omega_lo >= 0.0)) throw std::invalid_argument("one_over_f_modes: window must start at omega >= 0");
    if (omega_lo == 0.0 && exponent >= 1.0)
        throw std::invalid_argument("one_over_f_modes: divergent weight, omega_lo = 0 needs exponent < 1");
    return detail::modes_from_density(
        omega_lo, omega_hi, count, weight,
        [exponent](double w) { return std::pow(w, -exponent); }, "one_over_f");
}

// Echo back explicit (omega, eta) pairs, sorted by omega. Duplicate omegas are
// kept as distinct modes; all sums over the bath are mode-wise.
inline DiscretizedBath tabulated_modes(std::vector<std::pair<double, double>> pairs,
                                       std::string label = "tabulated") {
    if (pairs.empty()) throw std::invalid_argument("tabulated_modes: empty list");
    std::vector<BathMode> modes;
    modes.reserve(pairs.size());
    for (const auto& [omega, eta] : pairs) {
        BathMode m{omega, eta};
        if (!mode_is_valid(m))
            throw std::invalid_argument("tabulated_modes: negative or non-finite entry");
        modes.push_back(m);
    }
    std::stable_sort(modes.begin(), modes.end(),
                     [](const BathMode& a, const BathMode& b) { return a.omega < b.omega; });
    return DiscretizedBath(std::move(modes), std::move(label));
}

}  // namespace dephasim
