// oracles.hpp — independent brute-force validators for the analytic engines.
//
// Everything here goes through dense eigen-decomposition (Eigen's self-adjoint
// solver), deliberately sharing no code with the closed forms it checks. Oracles
// are single-mode; multi-mode results are products of single-mode factors because
// the models carry no intermode coupling.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "dephasim/boson_bath.hpp"
#include "dephasim/mat2.hpp"
#include "dephasim/pulse_sequence.hpp"
#include "dephasim/spin_bath.hpp"
#include "dephasim/types.hpp"

namespace dephasim {

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Branch propagator e^{+i H± t}, H± = omega sz ± eta sx, by real eigen-decomposition.
// Same phase convention as spin_mode_unitary, no shared math.
inline Mat2 spin_hamiltonian_oracle(const BathMode& m, Branch branch, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("spin_hamiltonian_oracle: t must be >= 0");
    const double sign = branch == Branch::plus ? 1.0 : -1.0;
    Eigen::Matrix2d h;
    h << m.omega, sign * m.eta, sign * m.eta, -m.omega;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("spin_hamiltonian_oracle: eigensolver failed");
    Eigen::Matrix2cd u = Eigen::Matrix2cd::Zero();
    for (int j = 0; j < 2; ++j) {
        const Eigen::Vector2d v = es.eigenvectors().col(j);
        const cplx phase = std::polar(1.0, es.eigenvalues()[j] * t);
        u += phase * (v * v.transpose()).cast<cplx>();
    }
    return {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
}

// Truncated-Fock configuration for the boson oracle.
struct FockConfig {
    int dimension{64};
};

enum class ThermalConvention { native_rate, standard_displacement };

inline const char* to_string(ThermalConvention c) {
    return c == ThermalConvention::native_rate ? "coth(beta*omega), native rate"
                                               : "coth(beta*omega/2), standard displacement";
}

struct FockReport {
    double coherence_fock{0.0};          // |Tr[V+ rho (V-)†]| in the truncated basis
    double coherence_standard{0.0};      // displacement engine, standard convention
    double coherence_native{0.0};        // displacement engine, native-rate convention
    double deviation_standard{0.0};
    double deviation_native{0.0};
    ThermalConvention matched{ThermalConvention::standard_displacement};
    double truncation_estimate{0.0};     // |C(D) - C(ceil(1.5 D))|
    int dimension_used{0};
    bool occupation_warning{false};      // thermal occupation not << D
    double mean_occupation{0.0};
};

namespace detail {

inline Eigen::MatrixXcd fock_branch_propagator(const BathMode& m, double sign, double t, int dim) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        h(n, n) = m.omega * double(n);
        if (n + 1 < dim) {
            const double c = sign * m.eta * std::sqrt(double(n + 1));
            h(n, n + 1) = c;
            h(n + 1, n) = c;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success) throw std::runtime_error("fock oracle: eigensolver failed");
    Eigen::VectorXcd phases(dim);
    for (int j = 0; j < dim; ++j) phases[j] = std::polar(1.0, -es.eigenvalues()[j] * t);
    const Eigen::MatrixXcd v = es.eigenvectors().cast<cplx>();
    return v * phases.asDiagonal() * v.adjoint();
}

// |Tr[V+ rho_th (V-)†]| with V± the branch propagators composed over toggled segments.
inline double fock_coherence_at_dimension(const BathMode& m, const ThermalParams& thermal,
                                          const PulseSequence& seq, int dim) {
    Eigen::VectorXd pop = Eigen::VectorXd::Zero(dim);
    if (thermal.zero_temp()) {
        pop[0] = 1.0;
    } else {
        double z = 0.0;
        for (int n = 0; n < dim; ++n) {
            pop[n] = std::exp(-thermal.beta * m.omega * double(n));
            z += pop[n];
        }
        pop /= z;
    }
    Eigen::MatrixXcd v_plus = Eigen::MatrixXcd::Identity(dim, dim);
    Eigen::MatrixXcd v_minus = v_plus;
    double sign = 1.0;
    for (double d : seq.segment_durations()) {
        v_plus = fock_branch_propagator(m, sign, d, dim) * v_plus;
        v_minus = fock_branch_propagator(m, -sign, d, dim) * v_minus;
        sign = -sign;
    }
    const Eigen::MatrixXcd w = v_minus.adjoint() * v_plus;
    cplx f(0.0, 0.0);
    for (int n = 0; n < dim; ++n) f += pop[n] * w(n, n);
    return std::abs(f);
}

inline DiscretizedBath single_mode_bath(const BathMode& m) {
    return DiscretizedBath({m}, "single-mode");
}

}  // namespace detail

// Direct truncated-Fock evolution of one mode under a flip sequence, traced against
// the thermal state. Reports the coherence alongside both analytic displacement
// conventions and records which one the direct evolution matches.
inline FockReport fock_oracle_coherence(const BathMode& m, const ThermalParams& thermal,
                                        const PulseSequence& seq, const FockConfig& fock = {}) {
    if (fock.dimension < 2) throw std::invalid_argument("fock_oracle_coherence: dimension must be >= 2");
    if (!(m.omega > 0.0)) throw std::invalid_argument("fock_oracle_coherence: needs omega > 0");

    FockReport r;
    if (!thermal.zero_temp()) {
        r.mean_occupation = 1.0 / std::expm1(thermal.beta * m.omega);
        r.occupation_warning = r.mean_occupation > 0.1 * double(fock.dimension);
    }

    const int d1 = fock.dimension;
    const int d2 = (3 * fock.dimension + 1) / 2;  // +50%
    const double c1 = detail::fock_coherence_at_dimension(m, thermal, seq, d1);
    const double c2 = detail::fock_coherence_at_dimension(m, thermal, seq, d2);
    r.truncation_estimate = std::abs(c2 - c1);
    if (r.truncation_estimate >= 1e-6)
        throw ConvergenceError("fock_oracle_coherence: truncation not converged at dimension " +
                               std::to_string(fock.dimension) + " (delta " +
                               std::to_string(r.truncation_estimate) + ")");
    r.coherence_fock = c2;
    r.dimension_used = d2;

    const DiscretizedBath bath = detail::single_mode_bath(m);
    r.coherence_standard = coherence_boson_standard(bath, thermal, seq);
    r.coherence_native = coherence_boson_exact(bath, thermal, seq);
    r.deviation_standard = std::abs(r.coherence_fock - r.coherence_standard);
    r.deviation_native = std::abs(r.coherence_fock - r.coherence_native);
    r.matched = r.deviation_standard <= r.deviation_native ? ThermalConvention::standard_displacement
                                                           : ThermalConvention::native_rate;
    return r;
}

enum class CommutatorKind { spin, boson };

struct CommutatorReport {
    cplx expected_scalar;          // -2i eta^2 sin(omega (t - t'))
    double max_identity_deviation; // vs scalar * I (interior block for bosons)
    double max_sigma_z_deviation;  // vs scalar * sigma_z (spin only)
    double trace_magnitude;
    bool identity_proportional;
    bool sigma_z_proportional;
};

// Interaction-picture coupling commutator [B(t), B(t')] computed from explicit
// matrices. Bosonic: a scalar times the identity (checked away from the truncation
// boundary). Spin: the same scalar times sigma_z, hence traceless and not a scalar.
inline CommutatorReport commutator_check(CommutatorKind kind, const BathMode& m, double t,
                                         double t_prime, const FockConfig& fock = {}) {
    CommutatorReport r{};
    r.expected_scalar = cplx(0.0, -2.0 * m.eta * m.eta * std::sin(m.omega * (t - t_prime)));

    if (kind == CommutatorKind::boson) {
        const int dim = std::max(fock.dimension, 4);
        auto b_of = [&](double time) {
            Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(dim, dim);
            for (int n = 0; n + 1 < dim; ++n) {
                const double amp = m.eta * std::sqrt(double(n + 1));
                b(n + 1, n) = amp * std::polar(1.0, m.omega * time);   // b† e^{+i w t}
                b(n, n + 1) = amp * std::polar(1.0, -m.omega * time);  // b  e^{-i w t}
            }
            return b;
        };
        const Eigen::MatrixXcd k = b_of(t) * b_of(t_prime) - b_of(t_prime) * b_of(t);
        double dev = 0.0;
        cplx tr(0.0, 0.0);
        for (int i = 0; i + 1 < dim; ++i) {
            for (int j = 0; j + 1 < dim; ++j) {
                const cplx want = i == j ? r.expected_scalar : cplx(0.0, 0.0);
                dev = std::max(dev, std::abs(k(i, j) - want));
            }
            tr += k(i, i);
        }
        r.max_identity_deviation = dev;
        r.trace_magnitude = std::abs(tr);
        r.identity_proportional = dev <= 1e-8 * std::max(1.0, std::abs(r.expected_scalar));
        r.sigma_z_proportional = false;
        return r;
    }

    // Spin mode: B(time) = eta (sigma+ e^{-i w time} + sigma- e^{+i w time}).
    auto b_of = [&](double time) {
        Mat2 b{0.0, 0.0, 0.0, 0.0};
        b.b = m.eta * std::polar(1.0, -m.omega * time);  // sigma+ component
        b.c = m.eta * std::polar(1.0, m.omega * time);   // sigma- component
        return b;
    };
    const Mat2 bt = b_of(t);
    const Mat2 bp = b_of(t_prime);
    const Mat2 k = bt * bp - bp * bt;
    const Mat2 want_sz{r.expected_scalar, 0.0, 0.0, -r.expected_scalar};
    r.max_sigma_z_deviation = max_abs_diff(k, want_sz);
    const Mat2 want_id{r.expected_scalar, 0.0, 0.0, r.expected_scalar};
    r.max_identity_deviation = max_abs_diff(k, want_id);
    r.trace_magnitude = std::abs(trace(k));
    const double scale = std::max(1.0, std::abs(r.expected_scalar));
    r.sigma_z_proportional = r.max_sigma_z_deviation <= 1e-12 * scale;
    r.identity_proportional = r.max_identity_deviation <= 1e-12 * scale;
    return r;
}

struct MagnusReport {
    double max_identity_deviation{0.0};  // interior-block defect of phase-stripped comparison
    double branch_phase_mismatch{0.0};   // |theta+ - theta-| after sign flip of displacement
    double extracted_phase{0.0};         // theta from the plus branch
    double analytic_phase{0.0};          // t * f(t) = eta^2 (omega t - sin omega t)/omega^2
    double phase_defect{0.0};            // min over sign of |theta -+ t f(t)| mod 2pi
};

// Second-order truncation check for one boson mode: the direct propagator
// e^{-i H± t} equals e^{-i omega n t} D(±alpha) up to a global phase common to the
// branches, and that phase matches eta^2 (omega t - sin omega t)/omega^2 up to sign.
inline MagnusReport magnus_check(const BathMode& m, double t, const FockConfig& fock = {}) {
    if (!(m.omega > 0.0)) throw std::invalid_argument("magnus_check: needs omega > 0");
    const int dim = std::max(fock.dimension, 8);
    const cplx alpha = m.eta * (1.0 - std::polar(1.0, m.omega * t)) / m.omega;

    // D(a) = exp(a b† - a* b) via eigen-decomposition of the Hermitian i(a b† - a* b).
    auto displacement = [&](cplx a) {
        Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(dim, dim);
        for (int n = 0; n + 1 < dim; ++n) {
            const double root = std::sqrt(double(n + 1));
            g(n + 1, n) = cplx(0.0, 1.0) * a * root;
            g(n, n + 1) = cplx(0.0, 1.0) * (-std::conj(a)) * root;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g);
        Eigen::VectorXcd phases(dim);
        for (int j = 0; j < dim; ++j) phases[j] = std::polar(1.0, -es.eigenvalues()[j]);
        return Eigen::MatrixXcd(es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint());
    };

    Eigen::VectorXcd free_phases(dim);
    for (int n = 0; n < dim; ++n) free_phases[n] = std::polar(1.0, m.omega * double(n) * t);

    MagnusReport r;
    cplx theta[2];
    for (int s = 0; s < 2; ++s) {
        const double sign = s == 0 ? 1.0 : -1.0;
        const Eigen::MatrixXcd direct = detail::fock_branch_propagator(m, sign, t, dim);
        const Eigen::MatrixXcd g =
            free_phases.asDiagonal() * direct * displacement(sign * alpha).adjoint();
        // g should be e^{i theta} I away from the truncation boundary.
        const int guard = dim / 4;
        const cplx ref = g(0, 0);
        double dev = 0.0;
        for (int i = 0; i < dim - guard; ++i)
            for (int j = 0; j < dim - guard; ++j)
                dev = std::max(dev, std::abs(g(i, j) - (i == j ? ref : cplx(0.0))));
        r.max_identity_deviation = std::max(r.max_identity_deviation, dev);
        theta[s] = ref;
    }
    r.branch_phase_mismatch = std::abs(theta[0] - theta[1]);
    r.extracted_phase = std::arg(theta[0]);
    r.analytic_phase = m.eta * m.eta * (m.omega * t - std::sin(m.omega * t)) / (m.omega * m.omega);
    auto mod_2pi = [](double x) {
        const double tau = 2.0 * std::numbers::pi;
        x = std::fmod(std::fmod(x, tau) + tau, tau);
        return std::min(x, tau - x);
    };
    r.phase_defect = std::min(mod_2pi(r.extracted_phase - r.analytic_phase),
                              mod_2pi(r.extracted_phase + r.analytic_phase));
    return r;
}

}  // namespace dephasim
