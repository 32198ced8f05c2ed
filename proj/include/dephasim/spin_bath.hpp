// spin_bath.hpp — exact qubit pure dephasing under a bath of spin-1/2 modes.
//
// Per mode the two qubit branches evolve under H± = omega * sz ± eta * sx, with the
// dressed frequency delta = sqrt(omega^2 + eta^2). The branch propagator is written
// in the e^{+iHt} phase convention,
//     U±(t) = cos(delta t) I + i sin(delta t)/delta (omega sz ± eta sx),
// and the coherence transfer factor per mode is Tr[V+ rho (V-)†] with the thermal
// mixture rho = p|e><e| + (1-p)|g><g|. The adjoint on the minus branch is required
// for |C| <= 1.
//
// Pulsed evolution multiplies branch-alternating 2x2 propagators; the periodic
// closed form diagonalizes one pulse-pair cycle Q = U-(tau) U+(tau) instead. Both
// routes agree to rounding, which the validation suite checks against each other
// and against direct Hamiltonian exponentiation.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include "dephasim/mat2.hpp"
#include "dephasim/pulse_sequence.hpp"
#include "dephasim/types.hpp"

namespace dephasim {

enum class Branch { plus, minus };

// Dressed mode frequency sqrt(omega^2 + eta^2); strictly above omega when eta > 0.
inline double dressed_frequency(const BathMode& m) { return std::hypot(m.omega, m.eta); }

// Branch propagator U±(t) per the closed form above. delta = 0 degenerates to the identity.
inline Mat2 spin_mode_unitary(const BathMode& m, Branch branch, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("spin_mode_unitary: t must be >= 0");
    const double delta = dressed_frequency(m);
    const double c = std::cos(delta * t);
    const double s = delta > 0.0 ? std::sin(delta * t) / delta : t;  // sin(x)/x limit
    const double sign = branch == Branch::plus ? 1.0 : -1.0;
    const cplx diag(0.0, s * m.omega);
    const cplx off(0.0, sign * s * m.eta);
    return {c + diag, off, off, c - diag};
}

// Free per-mode coherence transfer factor 1 - 2 eta^2/delta^2 sin^2(delta t).
// Independent of temperature; can be negative once eta >= omega.
inline double spin_free_mode_factor(const BathMode& m, double t) {
    if (m.eta == 0.0) return 1.0;
    const double delta = dressed_frequency(m);
    const double s = std::sin(delta * t);
    return 1.0 - 2.0 * m.eta * m.eta / (delta * delta) * s * s;
}

// Free decay exponent t * Gamma_sigma(t) = -sum_k ln(factor_k). +inf once any
// factor reaches the complete-dephasing floor.
inline double spin_free_exponent(const DiscretizedBath& bath, double t) {
    if (t == 0.0) return 0.0;
    double expo = 0.0;
    for (const BathMode& m : bath.modes()) {
        const double f = spin_free_mode_factor(m, t);
        if (f < kCompleteDephasingFloor) return std::numeric_limits<double>::infinity();
        expo -= std::log(f);
    }
    return expo;
}

// Free dephasing rate Gamma_sigma(t). Temperature never enters.
inline double gamma_spin_free(const DiscretizedBath& bath, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("gamma_spin_free: t must be >= 0");
    if (t == 0.0) return 0.0;
    return spin_free_exponent(bath, t) / t;
}

// Exact coherence transfer factor under an arbitrary flip sequence, as a product
// of per-mode traces of branch-alternating 2x2 propagators. An empty sequence
// reduces to free evolution at T. After an odd number of flips the factor lands in
// the flipped off-diagonal element; its modulus is the physical coherence either way.
inline cplx coherence_spin_pulsed(const DiscretizedBath& bath, const ThermalParams& thermal,
                                  const PulseSequence& seq) {
    const std::vector<double> segments = seq.segment_durations();
    cplx total(1.0, 0.0);
    for (const BathMode& m : bath.modes()) {
        Mat2 v_plus = Mat2::identity();
        Mat2 v_minus = Mat2::identity();
        bool plus_first = true;
        for (double d : segments) {
            const Branch b_plus = plus_first ? Branch::plus : Branch::minus;
            const Branch b_minus = plus_first ? Branch::minus : Branch::plus;
            v_plus = spin_mode_unitary(m, b_plus, d) * v_plus;
            v_minus = spin_mode_unitary(m, b_minus, d) * v_minus;
            plus_first = !plus_first;
        }
        const Mat2 w = adjoint(v_minus) * v_plus;
        const double p = thermal_population(m, thermal);
        total *= p * w.a + (1.0 - p) * w.d;
    }
    return total;
}

// Spectral data of one pulse-pair cycle Q = U-(tau) U+(tau) for one mode.
// Q lies in SU(2); its eigenvalues are exp(±i phi) with cos(phi) = x.
struct SpinCycleEigensystem {
    double x;             // 1 - 2 omega^2/delta^2 sin^2(delta tau)
    double y;             // (omega/eta) sin(2 delta tau)
    double phi;           // acos(x)
    cplx lambda_plus;     // exp(+i phi)
    cplx lambda_minus;    // exp(-i phi)
    cplx v_plus[2];       // eigenvector of lambda_plus
    cplx v_minus[2];      // eigenvector of lambda_minus
    cplx alpha;           // eigenvector coefficient in the |0> - i alpha |1> parametrization
    Mat2 cycle;           // Q itself
};

inline SpinCycleEigensystem spin_cycle_eigensystem(const BathMode& m, double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("spin_cycle_eigensystem: tau must be > 0");
    if (!(m.eta > 0.0)) throw std::invalid_argument("spin_cycle_eigensystem: needs eta > 0");
    SpinCycleEigensystem e;
    const double delta = dressed_frequency(m);
    const double s = std::sin(delta * tau);
    e.x = std::clamp(1.0 - 2.0 * m.omega * m.omega / (delta * delta) * s * s, -1.0, 1.0);
    e.y = m.omega / m.eta * std::sin(2.0 * delta * tau);
    e.phi = std::acos(e.x);
    e.lambda_plus = std::polar(1.0, e.phi);
    e.lambda_minus = std::polar(1.0, -e.phi);
    e.cycle = spin_mode_unitary(m, Branch::minus, tau) * spin_mode_unitary(m, Branch::plus, tau);

    // Eigenvectors from the off-diagonal structure of Q; fall back to the basis
    // vectors when Q is diagonal (phi = 0 or pi).
    const Mat2& q = e.cycle;
    if (std::abs(q.b) > 1e-300) {
        const cplx w0 = q.b;
        const cplx w1p = e.lambda_plus - q.a;
        const cplx w1m = e.lambda_minus - q.a;
        const double np = std::sqrt(std::norm(w0) + std::norm(w1p));
        const double nm = std::sqrt(std::norm(w0) + std::norm(w1m));
        e.v_plus[0] = w0 / np;
        e.v_plus[1] = w1p / np;
        e.v_minus[0] = w0 / nm;
        e.v_minus[1] = w1m / nm;
    } else {
        e.v_plus[0] = 1.0;
        e.v_plus[1] = 0.0;
        e.v_minus[0] = 0.0;
        e.v_minus[1] = 1.0;
    }
    e.alpha = e.v_plus[0] != cplx(0.0) ? cplx(0.0, 1.0) * e.v_plus[1] / e.v_plus[0] : cplx(0.0);
    return e;
}

// Control filter of the periodic closed form, sin^2(n phi)/cos^2(phi/2),
// from the spectral decomposition of the cycle operator.
inline double spin_periodic_filter(const BathMode& m, double tau, int n_pairs) {
    if (m.eta == 0.0) return 0.0;
    const double delta = dressed_frequency(m);
    const double s = std::sin(delta * tau);
    const double x = std::clamp(1.0 - 2.0 * m.omega * m.omega / (delta * delta) * s * s, -1.0, 1.0);
    const double phi = std::acos(x);
    const double snp = std::sin(double(n_pairs) * phi);
    return 2.0 * snp * snp / (1.0 + x);
}

// Per-mode coherence transfer factor after n pulse pairs at interval tau
// (total time 2 n tau), in the numerically stable rearrangement
//   f = 1 - 2 eta^2 sin^2(delta tau) sin^2(n phi) / (delta^2 - omega^2 sin^2(delta tau)),
// whose denominator is bounded below by eta^2.
inline double spin_periodic_mode_factor(const BathMode& m, double tau, int n_pairs) {
    if (m.eta == 0.0) return 1.0;
    const double delta = dressed_frequency(m);
    const double d2 = delta * delta;
    const double s = std::sin(delta * tau);
    const double s2 = s * s;
    const double x = std::clamp(1.0 - 2.0 * m.omega * m.omega / d2 * s2, -1.0, 1.0);
    const double snp = std::sin(double(n_pairs) * std::acos(x));
    return 1.0 - 2.0 * m.eta * m.eta * s2 * snp * snp / (d2 - m.omega * m.omega * s2);
}

// Decay exponent after n pulse pairs, T = 2 n tau. +inf at the complete-dephasing floor.
inline double spin_periodic_exponent(const DiscretizedBath& bath, double tau, int n_pairs) {
    double expo = 0.0;
    for (const BathMode& m : bath.modes()) {
        const double f = spin_periodic_mode_factor(m, tau, n_pairs);
        if (f < kCompleteDephasingFloor) return std::numeric_limits<double>::infinity();
        expo -= std::log(f);
    }
    return expo;
}

// Closed-form dephasing rate under n periodic pulse pairs at interval tau.
// Covers even pulse counts only; odd counts go through coherence_spin_pulsed.
inline double gamma_spin_periodic(const DiscretizedBath& bath, double tau, int n_pairs) {
    if (!(tau > 0.0)) throw std::invalid_argument("gamma_spin_periodic: tau must be > 0");
    if (n_pairs < 1) throw std::invalid_argument("gamma_spin_periodic: need n >= 1");
    return spin_periodic_exponent(bath, tau, n_pairs) / (2.0 * double(n_pairs) * tau);
}

// Free-evolution decay curve on a time grid.
inline DephasingResult free_decay_spin(const DiscretizedBath& bath, std::vector<double> times) {
    std::vector<double> expo(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) expo[i] = spin_free_exponent(bath, times[i]);
    return dephasing_from_exponents(std::move(times), expo);
}

}  // namespace dephasim
