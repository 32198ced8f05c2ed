// validate.hpp — the oracle suite: every analytic engine is checked against an
// independent route, and every convention ambiguity is measured and recorded
// instead of silently resolved.
//
// Checks either pass/fail against a pinned tolerance, or are `documented`:
// measurements of known formula anomalies that are reported, not asserted.

#pragma once

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dephasim/bath_spectrum.hpp"
#include "dephasim/boson_bath.hpp"
#include "dephasim/master_eq.hpp"
#include "dephasim/oracles.hpp"
#include "dephasim/spin_bath.hpp"

namespace dephasim {

enum class CheckStatus { pass, fail, documented };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::documented: return "documented";
    }
    return "?";
}

struct ValidationCheck {
    std::string name;
    CheckStatus status{CheckStatus::pass};
    double max_error{0.0};
    double tolerance{0.0};
    std::string note;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }
};

namespace detail {

inline void push(ValidationReport& report, const std::string& name, double max_error,
                 double tolerance, const std::string& note = {}) {
    report.checks.push_back({name, max_error <= tolerance ? CheckStatus::pass : CheckStatus::fail,
                             max_error, tolerance, note});
}

inline void push_documented(ValidationReport& report, const std::string& name, double measure,
                            const std::string& note) {
    report.checks.push_back({name, CheckStatus::documented, measure, 0.0, note});
}

}  // namespace detail

inline ValidationReport run_validation(int fock_dimension = 64) {
    ValidationReport report;
    std::mt19937 rng(20240817u);
    std::uniform_real_distribution<double> u_omega(0.1, 2.0);
    std::uniform_real_distribution<double> u_eta(0.05, 1.5);
    std::uniform_real_distribution<double> u_time(0.05, 1.2);
    std::uniform_int_distribution<int> u_pairs(1, 12);

    // 1. branch propagator vs direct Hamiltonian exponentiation, 1000 draws
    {
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const BathMode m{u_omega(rng), u_eta(rng)};
            const double t = u_time(rng);
            for (Branch b : {Branch::plus, Branch::minus})
                worst = std::max(worst, max_abs_diff(spin_mode_unitary(m, b, t),
                                                     spin_hamiltonian_oracle(m, b, t)));
        }
        detail::push(report, "spin_unitary_vs_hamiltonian_oracle", worst, 1e-10);
    }

    // 2. spin periodic closed form vs the branch-product route, 50 single + 10 multi mode
    {
        double worst = 0.0;
        const ThermalParams th = ThermalParams::zero_temperature();
        for (int i = 0; i < 50; ++i) {
            const BathMode m{u_omega(rng), u_eta(rng)};
            const double tau = u_time(rng);
            const int n = u_pairs(rng);
            const DiscretizedBath bath({m});
            const cplx product =
                coherence_spin_pulsed(bath, th, PulseSequence::periodic(tau, 2 * std::size_t(n)));
            worst = std::max(worst, std::abs(product - cplx(spin_periodic_mode_factor(m, tau, n))));
        }
        for (int i = 0; i < 10; ++i) {
            std::vector<std::pair<double, double>> pairs;
            for (int k = 0; k < 5; ++k) pairs.emplace_back(u_omega(rng), u_eta(rng));
            const DiscretizedBath bath = tabulated_modes(pairs);
            const double tau = u_time(rng);
            const int n = u_pairs(rng);
            const cplx product =
                coherence_spin_pulsed(bath, th, PulseSequence::periodic(tau, 2 * std::size_t(n)));
            double closed = 1.0;
            for (const BathMode& m : bath.modes()) closed *= spin_periodic_mode_factor(m, tau, n);
            worst = std::max(worst, std::abs(product - cplx(closed)));
        }
        detail::push(report, "spin_closed_form_vs_matrix_product", worst, 1e-8,
                     "cycle-spectral filter sin^2(n phi)/cos^2(phi/2), interval times inside, "
                     "prefactor time T = 2 n tau");
    }

    // 2b. the printed closed-form filter |sin(n phi)/(2 sin phi)|, both time readings
    {
        double worst_tau = 0.0, worst_total = 0.0;
        const ThermalParams th = ThermalParams::zero_temperature();
        std::mt19937 rng2(7u);
        for (int i = 0; i < 50; ++i) {
            const BathMode m{u_omega(rng2), u_eta(rng2)};
            const double tau = u_time(rng2);
            const int n = u_pairs(rng2);
            const double delta = dressed_frequency(m);
            auto printed_factor = [&](double t_inside) {
                const double s = std::sin(delta * t_inside);
                const double x =
                    std::clamp(1.0 - 2.0 * m.omega * m.omega / (delta * delta) * s * s, -1.0, 1.0);
                const double phi = std::acos(x);
                const double f = std::abs(std::sin(n * phi) / (2.0 * std::sin(phi)));
                return 1.0 - 2.0 * f * m.eta * m.eta / (delta * delta) * s * s;
            };
            const double product =
                coherence_spin_pulsed(DiscretizedBath({m}), th,
                                      PulseSequence::periodic(tau, 2 * std::size_t(n)))
                    .real();
            worst_tau = std::max(worst_tau, std::abs(printed_factor(tau) - product));
            worst_total = std::max(worst_total, std::abs(printed_factor(2.0 * n * tau) - product));
        }
        std::ostringstream note;
        note << "printed filter |sin(n phi)/(2 sin phi)| matches the product route under no time "
                "reading: max deviation "
             << worst_tau << " (interval reading) / " << worst_total
             << " (total-time reading); the cycle-spectral filter is the adopted form";
        detail::push_documented(report, "spin_printed_filter_mismatch",
                                std::max(worst_tau, worst_total), note.str());
    }

    // 3. empty sequence reduces to free evolution
    {
        double worst = 0.0;
        std::mt19937 rng2(11u);
        for (int i = 0; i < 25; ++i) {
            std::vector<std::pair<double, double>> pairs;
            for (int k = 0; k < 4; ++k) pairs.emplace_back(u_omega(rng2), 0.4 * u_eta(rng2));
            const DiscretizedBath bath = tabulated_modes(pairs);
            const double t = u_time(rng2);
            const double free_c = std::exp(-spin_free_exponent(bath, t));
            const cplx pulsed = coherence_spin_pulsed(bath, ThermalParams::zero_temperature(),
                                                      PulseSequence::free_evolution(t));
            worst = std::max(worst, std::abs(pulsed - cplx(free_c)));
        }
        detail::push(report, "spin_empty_sequence_vs_free", worst, 1e-12);
    }

    // 4. temperature independence of the spin engine
    {
        const DiscretizedBath bath = tabulated_modes({{0.3, 0.8}, {1.0, 0.4}, {2.2, 0.1}});
        const PulseSequence seq = PulseSequence::custom({0.21, 0.55, 0.8, 1.4}, 1.9);
        const double ref = std::abs(coherence_spin_pulsed(bath, ThermalParams::zero_temperature(), seq));
        double worst = 0.0;
        for (double beta : {0.01, 1.0, 100.0}) {
            const double c =
                std::abs(coherence_spin_pulsed(bath, ThermalParams::inverse_temperature(beta), seq));
            worst = std::max(worst, std::abs(c - ref));
        }
        detail::push(report, "spin_temperature_independence", worst, 1e-12);
    }

    // 5. boson engine calibration: zero pulses reproduce the native free rate
    {
        double worst = 0.0;
        std::mt19937 rng2(13u);
        for (int i = 0; i < 25; ++i) {
            std::vector<std::pair<double, double>> pairs;
            for (int k = 0; k < 4; ++k) pairs.emplace_back(u_omega(rng2), u_eta(rng2));
            const DiscretizedBath bath = tabulated_modes(pairs);
            const ThermalParams th = (i % 2) ? ThermalParams::inverse_temperature(0.3 + 0.2 * i)
                                             : ThermalParams::zero_temperature();
            const double t = u_time(rng2);
            const double via_rate = std::exp(-boson_free_exponent(bath, th, t));
            const double via_engine =
                coherence_boson_exact(bath, th, PulseSequence::free_evolution(t));
            worst = std::max(worst, std::abs(via_rate - via_engine));
        }
        detail::push(report, "boson_engine_zero_pulse_vs_free_rate", worst, 1e-12);
    }

    // 6. boson engine vs the periodic closed form
    {
        double worst = 0.0;
        std::mt19937 rng2(17u);
        for (int i = 0; i < 100; ++i) {
            const BathMode m{u_omega(rng2), u_eta(rng2)};
            const double tau = u_time(rng2);
            const int n = u_pairs(rng2);
            const ThermalParams th = (i % 2) ? ThermalParams::inverse_temperature(0.7)
                                             : ThermalParams::zero_temperature();
            const DiscretizedBath bath({m});
            const double engine =
                coherence_boson_exact(bath, th, PulseSequence::periodic(tau, std::size_t(n)));
            const double closed = std::exp(-boson_periodic_exponent(bath, th, tau, n));
            worst = std::max(worst, std::abs(engine - closed));
        }
        detail::push(report, "boson_engine_vs_periodic_closed_form", worst, 1e-10);
    }

    // 7. truncated-Fock oracle vs the displacement engine + thermal convention adjudication
    {
        double worst_standard = 0.0;
        double worst_native = 0.0;
        int matched_standard = 0, cases = 0;
        for (double beta : {0.5, 2.0, 0.0 /* 0 means zero temperature */}) {
            const ThermalParams th =
                beta == 0.0 ? ThermalParams::zero_temperature() : ThermalParams::inverse_temperature(beta);
            for (const PulseSequence& seq :
                 {PulseSequence::free_evolution(1.7), PulseSequence::custom({0.4, 1.1}, 2.0),
                  PulseSequence::uhrig_standard(1.5, 3)}) {
                const FockReport r =
                    fock_oracle_coherence(BathMode{1.0, 0.5}, th, seq, FockConfig{fock_dimension});
                worst_standard = std::max(worst_standard, r.deviation_standard);
                worst_native = std::max(worst_native, r.deviation_native);
                matched_standard += r.matched == ThermalConvention::standard_displacement ? 1 : 0;
                ++cases;
            }
        }
        detail::push(report, "fock_oracle_vs_displacement_standard", worst_standard, 1e-8);
        std::ostringstream note;
        note << "direct Fock evolution matched the coth(beta*omega/2) displacement convention in "
             << matched_standard << "/" << cases << " cases; max deviation from the native-rate "
             << "convention " << worst_native
             << " (the native path is a rate convention, not a displacement trace)";
        detail::push_documented(report, "boson_thermal_convention_adjudication", worst_native,
                                note.str());
    }

    // 8. interaction-picture commutator structure
    {
        const CommutatorReport zero =
            commutator_check(CommutatorKind::boson, {1.0, 1.0}, 0.7, 0.7, FockConfig{fock_dimension});
        const CommutatorReport cb = commutator_check(CommutatorKind::boson, {1.0, 1.0}, 1.3,
                                                     1.3 - 1.5707963267948966, FockConfig{fock_dimension});
        const CommutatorReport cs =
            commutator_check(CommutatorKind::spin, {1.0, 1.0}, 1.3, 1.3 - 1.5707963267948966);
        const double boson_dev = std::max(zero.max_identity_deviation, cb.max_identity_deviation);
        detail::push(report, "commutator_boson_c_number", boson_dev, 1e-8,
                     "proportional to identity away from the truncation boundary");
        const double spin_dev = std::max(cs.max_sigma_z_deviation, cs.trace_magnitude);
        detail::push(report, "commutator_spin_sigma_z", cs.identity_proportional ? 1.0 : spin_dev,
                     1e-10, "traceless, proportional to sigma_z, not to the identity");
    }

    // 9. second-order truncation of the time-ordered exponent (boson)
    {
        const MagnusReport r = magnus_check(BathMode{1.0, 0.6}, 1.3, FockConfig{96});
        detail::push(report, "magnus_second_order_identity", r.max_identity_deviation, 1e-8,
                     "direct propagator equals free rotation times displacement, up to phase");
        detail::push(report, "magnus_phase_cancels_between_branches", r.branch_phase_mismatch, 1e-8);
        detail::push(report, "magnus_phase_matches_kernel", r.phase_defect, 1e-8,
                     "global phase magnitude equals eta^2 (omega t - sin omega t)/omega^2");
    }

    // 10. second-order boson identity is bit-level
    {
        const DiscretizedBath bath = tabulated_modes({{0.4, 0.3}, {1.1, 0.6}});
        const ThermalParams th = ThermalParams::inverse_temperature(1.3);
        double worst = 0.0;
        for (double t : {0.3, 0.9, 2.4})
            worst = std::max(worst, std::abs(gamma_me_boson(bath, th, t) - gamma_boson_free(bath, th, t)));
        for (int n : {1, 4, 9})
            worst = std::max(worst, std::abs(gamma_me_boson(bath, th, 0.37, n) -
                                             gamma_boson_periodic(bath, th, 0.37, n)));
        detail::push(report, "me_boson_bit_identity", worst, 0.0, "shared code path");
    }

    // 11. short-time order of the second-order spin exponent (known anomaly)
    {
        const DiscretizedBath bath = tabulated_modes({{1.0, 1.0}});
        const double e1 = gamma_me_spin_free(bath, 1e-3);
        const double e2 = gamma_me_spin_free(bath, 2e-3);
        const double order_me = std::log2(e2 / e1);
        const double x1 = spin_free_exponent(bath, 1e-3);
        const double x2 = spin_free_exponent(bath, 2e-3);
        const double order_exact = std::log2(x2 / x1);
        std::ostringstream note;
        note << "measured short-time growth order: second-order formula " << order_me
             << " (cubic), exact " << order_exact
             << " (quadratic); the weak-coupling exponent undershoots early and overshoots late, "
                "so no pointwise ordering against the exact exponent exists";
        detail::push_documented(report, "me_spin_short_time_order", order_me, note.str());
    }

    // 12. interval-form Uhrig timing recipe is unconstructible (known anomaly)
    {
        int failing = 0;
        std::string first;
        for (std::size_t n = 1; n <= 8; ++n) {
            try {
                PulseSequence::uhrig_paper(1.0, n);
            } catch (const std::invalid_argument& e) {
                if (first.empty()) first = e.what();
                ++failing;
            }
        }
        std::ostringstream note;
        note << "interval recipe sin^2(j*pi/N): construction fails for " << failing
             << " of N in 1..8 (N=1 degenerates to one flip at ~1e-32); first diagnostic: " << first;
        detail::push_documented(report, "uhrig_interval_recipe_anomaly", double(failing), note.str());
    }

    return report;
}

inline std::string validation_text(const ValidationReport& report) {
    std::ostringstream out;
    out << "validation report\n";
    for (const auto& c : report.checks) {
        char line[160];
        std::snprintf(line, sizeof line, "  [%-10s] %-42s max_error=%-12.3e tol=%-9.1e\n",
                      to_string(c.status), c.name.c_str(), c.max_error, c.tolerance);
        out << line;
        if (!c.note.empty()) out << "               " << c.note << "\n";
    }
    out << (report.all_passed() ? "all checks passed\n" : "CHECK FAILURES PRESENT\n");
    return out.str();
}

}  // namespace dephasim
