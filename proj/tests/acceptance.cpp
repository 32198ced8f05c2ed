// Acceptance suite: one test case per criterion, each printing a single
// [PASS]/[FAIL] line. Criterion 6 carries a known analytic failure in its
// ordering clause; it is asserted as stated and reports the counterexample
// rather than being weakened to pass.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "dephasim/dephasim.hpp"

using namespace dephasim;

namespace {

const double kPi = std::numbers::pi;

void report(int criterion, const char* text, bool ok, const std::string& detail = {}) {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, text,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

DiscretizedBath severity_bath() {
    LorentzianSpectrum spec;
    spec.omega0 = 0.0;
    spec.gamma_c = 1.0;
    spec.weight = 1.0;
    spec.omega_lo = 0.0;
    spec.omega_hi = 10.0;
    spec.modes = 200;
    return lorentzian_modes(spec);
}

// Figure parameters are unpublished; this line-centered Lorentzian places the
// boson Zeno boundary at the correlation time, which is the figure's geometry.
DiscretizedBath crossover_bath() {
    return lorentzian_modes(LorentzianSpectrum::with_default_window(1.65, 1.0, 0.05, 200));
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("criterion 1: spin bath dephases at least as hard as the boson bath") {
    const DiscretizedBath bath = severity_bath();
    const ThermalParams th = ThermalParams::zero_temperature();
    bool ok = true;
    double min_margin = 1e300;
    for (int i = 1; i <= 100; ++i) {
        const double t = 5.0 * double(i) / 100.0;
        const double spin = spin_free_exponent(bath, t);
        const double boson = boson_free_exponent(bath, th, t);
        if (!(spin >= boson)) ok = false;
        if (std::isfinite(spin)) min_margin = std::min(min_margin, spin - boson);
    }
    report(1, "spin exponent >= boson exponent at all 100 points in (0, 5]", ok,
           "min finite margin " + format_double(min_margin));
    CHECK(ok);
}

TEST_CASE("criterion 2: spin dephasing is temperature independent to 1e-12") {
    const DiscretizedBath bath = tabulated_modes({{0.3, 0.8}, {0.9, 0.4}, {2.1, 0.15}});
    const PulseSequence sequences[] = {
        PulseSequence::free_evolution(1.3),
        PulseSequence::periodic(0.2, 8),
        PulseSequence::custom({0.17, 0.5, 0.62, 1.1}, 1.4),
    };
    double worst = 0.0;
    for (const PulseSequence& seq : sequences) {
        const double ref = std::abs(coherence_spin_pulsed(bath, ThermalParams::zero_temperature(), seq));
        for (double beta : {0.01, 1.0, 100.0}) {
            const double c =
                std::abs(coherence_spin_pulsed(bath, ThermalParams::inverse_temperature(beta), seq));
            worst = std::max(worst, std::abs(c - ref));
        }
    }
    const bool ok = worst <= 1e-12;
    report(2, "|C| identical across beta in {0.01, 1, 100, inf}, with and without pulses", ok,
           "max spread " + format_double(worst));
    CHECK(ok);
}

TEST_CASE("criterion 3: resonant spin mode dephases completely, boson never below 1/e") {
    const DiscretizedBath bath = tabulated_modes({{1.0, 1.0}});
    const double t_star = kPi / (2.0 * std::sqrt(2.0));
    const double c_spin = std::exp(-spin_free_exponent(bath, t_star));
    bool boson_ok = true;
    const ThermalParams th = ThermalParams::zero_temperature();
    for (int i = 1; i <= 400; ++i) {
        const double t = 8.0 * double(i) / 400.0;
        if (std::exp(-boson_free_exponent(bath, th, t)) < std::exp(-1.0) - 1e-12) boson_ok = false;
    }
    const bool ok = c_spin <= 1e-15 && boson_ok;
    report(3, "C_spin(pi/(2 sqrt 2)) <= 1e-15 while C_boson >= 1/e for all t", ok,
           "C_spin = " + format_double(c_spin));
    CHECK(ok);
}

TEST_CASE("criterion 4: periodic closed form matches the branch-product route to 1e-8") {
    std::mt19937 rng(404);
    std::uniform_real_distribution<double> u_w(0.1, 2.0), u_e(0.05, 1.5), u_tau(0.05, 1.2);
    std::uniform_int_distribution<int> u_n(1, 12);
    const ThermalParams th = ThermalParams::zero_temperature();
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const BathMode m{u_w(rng), u_e(rng)};
        const double tau = u_tau(rng);
        const int n = u_n(rng);
        const cplx product = coherence_spin_pulsed(DiscretizedBath({m}), th,
                                                   PulseSequence::periodic(tau, 2 * std::size_t(n)));
        worst = std::max(worst, std::abs(product - cplx(spin_periodic_mode_factor(m, tau, n))));
    }
    for (int i = 0; i < 10; ++i) {
        std::vector<std::pair<double, double>> pairs;
        for (int k = 0; k < 6; ++k) pairs.emplace_back(u_w(rng), u_e(rng));
        const DiscretizedBath bath = tabulated_modes(pairs);
        const double tau = u_tau(rng);
        const int n = u_n(rng);
        const cplx product =
            coherence_spin_pulsed(bath, th, PulseSequence::periodic(tau, 2 * std::size_t(n)));
        double closed = 1.0;
        for (const BathMode& m : bath.modes()) closed *= spin_periodic_mode_factor(m, tau, n);
        worst = std::max(worst, std::abs(product - cplx(closed)));
    }
    const bool ok = worst <= 1e-8;
    report(4, "closed form vs matrix product over 50 single-mode + 10 multi-mode configs", ok,
           "max deviation " + format_double(worst));
    CHECK(ok);
}

TEST_CASE("criterion 5: oracle agreement across all three validators") {
    std::mt19937 rng(505);
    std::uniform_real_distribution<double> u_w(0.0, 3.0), u_e(0.0, 2.0), u_t(0.0, 2.0);
    double worst_unitary = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const BathMode m{u_w(rng), u_e(rng)};
        const double t = u_t(rng);
        for (Branch b : {Branch::plus, Branch::minus})
            worst_unitary = std::max(
                worst_unitary, max_abs_diff(spin_mode_unitary(m, b, t), spin_hamiltonian_oracle(m, b, t)));
    }
    const bool unitary_ok = worst_unitary <= 1e-10;

    double worst_fock = 0.0;
    for (double beta : {0.5, 2.0}) {
        const FockReport r =
            fock_oracle_coherence({1.0, 0.5}, ThermalParams::inverse_temperature(beta),
                                  PulseSequence::custom({0.4, 1.1}, 2.0), FockConfig{64});
        worst_fock = std::max(worst_fock, r.deviation_standard);
    }
    {
        const FockReport r = fock_oracle_coherence({1.0, 0.5}, ThermalParams::zero_temperature(),
                                                   PulseSequence::free_evolution(1.7), FockConfig{64});
        worst_fock = std::max(worst_fock, r.deviation_standard);
    }
    const bool fock_ok = worst_fock <= 1e-8;

    const CommutatorReport cb =
        commutator_check(CommutatorKind::boson, {1.0, 1.0}, 1.3, 1.3 - kPi / 2.0, FockConfig{64});
    const CommutatorReport cs = commutator_check(CommutatorKind::spin, {1.0, 1.0}, 1.3, 1.3 - kPi / 2.0);
    const bool comm_ok = cb.identity_proportional && cs.sigma_z_proportional &&
                         !cs.identity_proportional && cs.trace_magnitude <= 1e-12;

    const bool ok = unitary_ok && fock_ok && comm_ok;
    report(5, "propagator oracle (1000 draws), Fock vs displacement, commutator structure", ok,
           "unitary " + format_double(worst_unitary) + ", fock " + format_double(worst_fock) +
               std::string(", commutators ") + (comm_ok ? "ok" : "WRONG"));
    CHECK(ok);
}

TEST_CASE("criterion 6: second-order identities and bounds") {
    // (a) boson second order is the exact path, bit for bit
    const DiscretizedBath boson_bath_modes = tabulated_modes({{0.4, 0.3}, {1.1, 0.6}, {2.3, 0.2}});
    const ThermalParams th = ThermalParams::inverse_temperature(0.9);
    bool bit_ok = true;
    for (double t : {0.2, 0.9, 1.7, 3.3})
        bit_ok = bit_ok && gamma_me_boson(boson_bath_modes, th, t) == gamma_boson_free(boson_bath_modes, th, t);
    for (int n : {1, 3, 8})
        bit_ok = bit_ok && gamma_me_boson(boson_bath_modes, th, 0.41, n) ==
                               gamma_boson_periodic(boson_bath_modes, th, 0.41, n);

    // (b) claimed ordering: second-order spin exponent >= exact on (0, pi/delta]
    bool order_ok = true;
    std::string counterexample;
    for (double ratio : {0.5, 1.0, 2.0}) {
        const BathMode m{1.0, ratio};
        const DiscretizedBath bath({m});
        const double t_end = kPi / dressed_frequency(m);
        for (int i = 1; i <= 64; ++i) {
            const double t = t_end * double(i) / 64.0;
            const double me = gamma_me_spin_free(bath, t);
            const double exact = spin_free_exponent(bath, t);
            if (!(me >= exact)) {
                order_ok = false;
                if (counterexample.empty()) {
                    counterexample = "eta/omega=" + format_double(ratio) + " t=" + format_double(t) +
                                     " me=" + format_double(me) + " exact=" + format_double(exact) +
                                     " (second-order exponent is cubic at short times, exact is "
                                     "quadratic, so the ordering cannot hold pointwise)";
                }
            }
        }
    }

    // (c) weak coupling: coherences agree to 1e-2 over [0, 5/omega]
    const DiscretizedBath weak = tabulated_modes({{1.0, 0.01}});
    double worst_weak = 0.0;
    for (int i = 1; i <= 100; ++i) {
        const double t = 5.0 * double(i) / 100.0;
        worst_weak = std::max(worst_weak, std::abs(std::exp(-spin_free_exponent(weak, t)) -
                                                   std::exp(-gamma_me_spin_free(weak, t))));
    }
    const bool weak_ok = worst_weak <= 0.01;

    const bool ok = bit_ok && order_ok && weak_ok;
    report(6, "boson bit-identity, spin overestimate ordering, weak-coupling 1% agreement", ok,
           std::string("bit-identity ") + (bit_ok ? "ok" : "BROKEN") + "; ordering " +
               (order_ok ? "holds" : std::string("fails: ") + counterexample) + "; weak-coupling dev " +
               format_double(worst_weak));
    CHECK(bit_ok);
    CHECK(weak_ok);
    CHECK_MESSAGE(order_ok,
                  "known analytic counterexample: the printed second-order spin exponent grows as t^3 "
                  "at short times while the exact exponent is quadratic, and for eta >= omega the "
                  "exact coherence vanishes completely while the second-order one stays finite; no "
                  "time reading of the formula restores a pointwise ordering, see the compare-me "
                  "output and the validation report");
}

TEST_CASE("criterion 7: Zeno to anti-Zeno crossover geometry") {
    const DiscretizedBath bath = crossover_bath();
    const ThermalParams th = ThermalParams::zero_temperature();
    bool boson_ok = true, spin_ok = true;
    std::string taus;
    for (int n : {5, 10, 20}) {
        const CrossoverResult b = crossover_interval(BathKind::boson, bath, th, n, 0.2, 2.5, 128);
        const CrossoverResult s = crossover_interval(BathKind::spin, bath, th, n, 0.1, 2.5, 128);
        boson_ok = boson_ok && b.found && std::abs(b.tau_star - 1.0) <= 0.1;
        spin_ok = spin_ok && s.found && s.tau_star < 1.0;
        taus += " n=" + std::to_string(n) + ": boson " + (b.found ? format_double(b.tau_star) : "none") +
                ", spin " + (s.found ? format_double(s.tau_star) : "none") + ";";
    }
    const Enhancement spin_mid = enhancement_ratio(BathKind::spin, bath, th, 0.75, 10);
    const Enhancement boson_mid = enhancement_ratio(BathKind::boson, bath, th, 0.75, 10);
    const bool contrast_ok = !spin_mid.masked && !boson_mid.masked && spin_mid.ratio < 1.0 &&
                             boson_mid.ratio > 1.0;
    const bool ok = boson_ok && spin_ok && contrast_ok;
    report(7, "boson tau* = 1/Gamma_c +- 10%, spin tau* inside it, opposite verdicts at tau = 0.75",
           ok, taus + " contrast R_spin=" + format_double(spin_mid.ratio) +
                   " R_boson=" + format_double(boson_mid.ratio));
    CHECK(ok);
}

TEST_CASE("criterion 8: control filter is exactly one at n = 1") {
    bool ok = true;
    // generic points and the removable points of the filter's ratios
    for (double wt : {0.3, 1.0, kPi / 2.0, kPi, 2.0 * kPi, 3.0 * kPi})
        ok = ok && boson_filter(1.0, wt, 1) == 1.0;
    // refinement toward the removable point
    for (double eps = 1e-2; eps > 1e-13; eps *= 1e-2)
        ok = ok && boson_filter(1.0, kPi - eps, 1) == 1.0 && boson_filter(1.0, kPi + eps, 1) == 1.0;
    report(8, "F(n=1) identically 1, verified by refinement through the removable points", ok);
    CHECK(ok);
}

TEST_CASE("criterion 9: every CLI task writes byte-identical output on reruns") {
    const std::filesystem::path base = std::filesystem::temp_directory_path() / "dephasim_acceptance";
    std::filesystem::remove_all(base);
    const std::string configs[] = {
        "task = free-decay\n[spectrum]\nkind = lorentzian\ngamma_c = 1.0\nmodes = 60\n"
        "[grid]\nt_max = 3.0\nsamples = 40\n",
        "task = pulsed-decay\n[spectrum]\nkind = tabulated\npairs = 0.8 0.4; 1.7 0.2\n"
        "[grid]\nt_max = 3.0\nsamples = 40\n[sequence]\nkind = periodic\ntau = 0.3\n",
        "task = zeno-map\n[spectrum]\nkind = lorentzian\nomega0 = 1.65\ngamma_c = 1.0\n"
        "weight = 0.05\nmodes = 60\n[zeno]\ntau_min = 0.2\ntau_max = 1.6\ntau_count = 12\n"
        "n_values = 5 10\n",
        "task = compare-me\n[spectrum]\nkind = tabulated\npairs = 1.0 0.5\n"
        "[grid]\nt_max = 2.0\nsamples = 30\n",
        "task = validate\n[fock]\ncutoff = 48\n",
    };
    bool ok = true;
    std::string note;
    for (std::size_t i = 0; i < std::size(configs); ++i) {
        RunConfig cfg = parse_config(configs[i]);
        cfg.output_dir = (base / ("a" + std::to_string(i))).string();
        const int code_a = run(cfg);
        cfg.output_dir = (base / ("b" + std::to_string(i))).string();
        const int code_b = run(cfg);
        if (code_a != code_b) ok = false;
        for (const auto& entry : std::filesystem::directory_iterator(cfg.output_dir)) {
            const auto name = entry.path().filename();
            const std::string a = slurp(base / ("a" + std::to_string(i)) / name);
            const std::string b = slurp(base / ("b" + std::to_string(i)) / name);
            if (a.empty() || a != b) {
                ok = false;
                note += " mismatch in " + name.string() + ";";
            }
        }
    }
    std::filesystem::remove_all(base);
    report(9, "free-decay, pulsed-decay, zeno-map, compare-me, validate rerun byte-identically", ok,
           note);
    CHECK(ok);
}
