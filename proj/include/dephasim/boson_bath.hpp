// boson_bath.hpp — exact qubit pure dephasing under a bath of harmonic modes.
//
// Two conventions live side by side and are never mixed silently:
//
//  * The native rate convention: Gamma_b(t) = (1/t) sum_k (eta^2/omega^2)
//    coth(beta omega) sin^2(omega t), and its periodic-pulse filter F. This is the
//    library's canonical boson path; note its single-mode revivals have period
//    pi/omega and the thermal weight is coth(beta omega).
//
//  * The standard displacement convention: C = exp(-sum_k 2 coth(beta omega/2) |alpha_k|^2)
//    with the toggled-frame displacement alpha_k. This is what direct Hamiltonian
//    evolution of omega b†b ± eta (b† + b) produces, and what the truncated-Fock
//    oracle matches.
//
// The arbitrary-sequence engine coherence_boson_exact uses the displacement alpha
// with the per-mode weight coth(beta omega) cos^2(omega T / 2), which reproduces the
// native free rate at zero pulses and the native periodic filter at n intervals,
// exactly. A weight without the cos^2(omega T/2) factor cannot do both: the native
// convention oscillates at twice the displacement frequency.

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dephasim/pulse_sequence.hpp"
#include "dephasim/types.hpp"

namespace dephasim {

// Free dephasing exponent t * Gamma_b(t) in the native convention.
inline double boson_free_exponent(const DiscretizedBath& bath, const ThermalParams& thermal,
                                  double t) {
    double expo = 0.0;
    for (const BathMode& m : bath.modes()) {
        if (!(m.omega > 0.0))
            throw std::invalid_argument("boson bath: mode with omega = 0 makes the rate divergent");
        const double s = std::sin(m.omega * t);
        expo += m.eta * m.eta / (m.omega * m.omega) * coth_beta_omega(thermal, m.omega) * s * s;
    }
    return expo;
}

// Temperature-dependent free dephasing rate Gamma_b(t).
inline double gamma_boson_free(const DiscretizedBath& bath, const ThermalParams& thermal, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("gamma_boson_free: t must be >= 0");
    if (t == 0.0) return 0.0;
    return boson_free_exponent(bath, thermal, t) / t;
}

// sin(n x)/sin(x), with the removable points x = k pi evaluated by l'Hopital.
inline double dirichlet_ratio(double x, int n) {
    const double s = std::sin(x);
    if (std::abs(s) < 1e-8) return double(n) * std::cos(double(n) * x) / std::cos(x);
    return std::sin(double(n) * x) / s;
}

// Periodic-pulse filter for one boson mode, n intervals of length tau:
//   F = [ sin(n u)/sin(u) ]^2 / [ sin(n v)/sin(v) ]^2,  u = (pi + omega tau)/2,  v = omega tau / 2.
// Identically 1 at n = 1, including the removable points, because both ratios
// collapse to the same expression. Genuine poles of F (zeros of the v-ratio alone)
// blow up; simultaneous zeros of both ratios are removable and evaluated by their
// slope limit.
inline double boson_filter(double omega, double tau, int n) {
    if (n < 1) throw std::invalid_argument("boson_filter: need n >= 1");
    const double u = 0.5 * (std::numbers::pi + omega * tau);
    const double v = 0.5 * omega * tau;
    const double ru = dirichlet_ratio(u, n);
    const double rv = dirichlet_ratio(v, n);
    if (std::abs(rv) < 1e-6 && std::abs(ru) < 1e-6) {
        const double lim = std::cos(double(n) * u) * std::sin(v) / (std::cos(double(n) * v) * std::sin(u));
        return lim * lim;
    }
    if (rv == 0.0) return std::numeric_limits<double>::infinity();
    const double r = ru / rv;
    return r * r;
}

// Per-mode pulsed exponent term in the regular combination
//   (eta^2/omega^2) coth(beta omega) * 4 sin^2(omega tau/2) [sin(n u)/sin(u)]^2 cos^2(n omega tau/2),
// which equals F * sin^2(omega t) with t = n tau but stays finite through all of
// F's poles (they cancel against zeros of sin^2(omega t)).
inline double boson_pulsed_mode_exponent(const BathMode& m, const ThermalParams& thermal,
                                         double tau, int n) {
    if (!(m.omega > 0.0))
        throw std::invalid_argument("boson bath: mode with omega = 0 makes the rate divergent");
    const double u = 0.5 * (std::numbers::pi + m.omega * tau);
    const double v = 0.5 * m.omega * tau;
    const double ru = dirichlet_ratio(u, n);
    const double sv = std::sin(v);
    const double cn = std::cos(double(n) * v);
    return m.eta * m.eta / (m.omega * m.omega) * coth_beta_omega(thermal, m.omega) * 4.0 * sv * sv *
           ru * ru * cn * cn;
}

inline double boson_periodic_exponent(const DiscretizedBath& bath, const ThermalParams& thermal,
                                      double tau, int n) {
    if (n == 1) return boson_free_exponent(bath, thermal, tau);  // F == 1 algebraically
    double expo = 0.0;
    for (const BathMode& m : bath.modes()) expo += boson_pulsed_mode_exponent(m, thermal, tau, n);
    return expo;
}

// Dephasing rate under n periodic intervals of length tau, evaluated at t = n tau.
inline double gamma_boson_periodic(const DiscretizedBath& bath, const ThermalParams& thermal,
                                   double tau, int n) {
    if (!(tau > 0.0)) throw std::invalid_argument("gamma_boson_periodic: tau must be > 0");
    if (n < 1) throw std::invalid_argument("gamma_boson_periodic: need n >= 1");
    if (n == 1) return gamma_boson_free(bath, thermal, tau);
    return boson_periodic_exponent(bath, thermal, tau, n) / (double(n) * tau);
}

// Toggled-frame displacement amplitude of one mode under a flip sequence:
//   alpha = eta/(i omega) sum_j s_j (e^{i omega t_{j+1}} - e^{i omega t_j}),  s_j = (-1)^j.
// With no flips this is i * eta (1 - e^{i omega T})/omega; the global phase is
// irrelevant, only |alpha|^2 enters any coherence.
inline cplx displacement_alpha(const BathMode& m, const PulseSequence& seq) {
    if (!(m.omega > 0.0))
        throw std::invalid_argument("displacement_alpha: omega = 0 makes the amplitude divergent");
    cplx acc(0.0, 0.0);
    double sign = 1.0;
    double prev = 0.0;
    auto phase = [&](double t) { return std::polar(1.0, m.omega * t); };
    for (double t : seq.flips()) {
        acc += sign * (phase(t) - phase(prev));
        sign = -sign;
        prev = t;
    }
    acc += sign * (phase(seq.total_time()) - phase(prev));
    return m.eta * acc / cplx(0.0, m.omega);
}

// Arbitrary-sequence coherence in the native convention (see header comment).
inline double coherence_boson_exact(const DiscretizedBath& bath, const ThermalParams& thermal,
                                    const PulseSequence& seq) {
    double expo = 0.0;
    for (const BathMode& m : bath.modes()) {
        const cplx a = displacement_alpha(m, seq);
        const double c = std::cos(0.5 * m.omega * seq.total_time());
        expo += coth_beta_omega(thermal, m.omega) * c * c * std::norm(a);
    }
    return std::exp(-expo);
}

// Arbitrary-sequence coherence in the standard displacement convention,
// C = exp(-sum 2 coth(beta omega/2) |alpha|^2). The truncated-Fock oracle matches this.
inline double coherence_boson_standard(const DiscretizedBath& bath, const ThermalParams& thermal,
                                       const PulseSequence& seq) {
    double expo = 0.0;
    for (const BathMode& m : bath.modes()) {
        const cplx a = displacement_alpha(m, seq);
        expo += 2.0 * coth_half_beta_omega(thermal, m.omega) * std::norm(a);
    }
    return std::exp(-expo);
}

// Free-evolution decay curve on a time grid.
inline DephasingResult free_decay_boson(const DiscretizedBath& bath, const ThermalParams& thermal,
                                        std::vector<double> times) {
    std::vector<double> expo(times.size());
    for (std::size_t i = 0; i < times.size(); ++i)
        expo[i] = boson_free_exponent(bath, thermal, times[i]);
    return dephasing_from_exponents(std::move(times), expo);
}

}  // namespace dephasim
