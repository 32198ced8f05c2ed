#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dephasim/bath_spectrum.hpp"
#include "dephasim/boson_bath.hpp"
#include "dephasim/spin_bath.hpp"

using namespace dephasim;

namespace {
const double kPi = std::numbers::pi;
}

TEST_CASE("gamma_boson_free: resonant single mode at zero temperature") {
    const DiscretizedBath bath = tabulated_modes({{1.0, 1.0}});
    const ThermalParams th = ThermalParams::zero_temperature();
    const double t1 = kPi / 2.0;
    CHECK(t1 * gamma_boson_free(bath, th, t1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::exp(-t1 * gamma_boson_free(bath, th, t1)) == doctest::Approx(std::exp(-1.0)));
    // full revival at t = pi
    CHECK(kPi * gamma_boson_free(bath, th, kPi) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("gamma_boson_free: zero-frequency modes are a hard error") {
    const DiscretizedBath bath = tabulated_modes({{0.0, 0.5}, {1.0, 0.5}});
    CHECK_THROWS_AS(gamma_boson_free(bath, ThermalParams::zero_temperature(), 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(displacement_alpha({0.0, 0.5}, PulseSequence::free_evolution(1.0)),
                    std::invalid_argument);
}

TEST_CASE("single-mode free coherence is periodic with period pi/omega") {
    const DiscretizedBath bath = tabulated_modes({{1.7, 0.8}});
    const ThermalParams th = ThermalParams::inverse_temperature(1.1);
    const double period = kPi / 1.7;
    for (double t : {0.3, 0.9, 1.4}) {
        const double a = boson_free_exponent(bath, th, t);
        const double b = boson_free_exponent(bath, th, t + period);
        CHECK(a == doctest::Approx(b).epsilon(1e-10));
    }
}

TEST_CASE("hotter bath dephases harder: C non-increasing as beta decreases") {
    const DiscretizedBath bath = tabulated_modes({{0.5, 0.4}, {1.3, 0.7}});
    const double t = 0.8;
    double prev_exponent = boson_free_exponent(bath, ThermalParams::zero_temperature(), t);
    for (double beta : {5.0, 1.0, 0.3, 0.05}) {
        const double e = boson_free_exponent(bath, ThermalParams::inverse_temperature(beta), t);
        CHECK(e >= prev_exponent - 1e-14);
        prev_exponent = e;
    }
}

TEST_CASE("boson_filter: identically one at n=1, through the removable points") {
    for (double wt : {0.3, 1.0, kPi, 2.0 * kPi, 3.0 * kPi}) CHECK(boson_filter(1.0, wt, 1) == 1.0);
    // approach the removable point from both sides
    for (double eps : {1e-2, 1e-5, 1e-9, 1e-12}) {
        CHECK(boson_filter(1.0, kPi - eps, 1) == 1.0);
        CHECK(boson_filter(1.0, kPi + eps, 1) == 1.0);
    }
}

TEST_CASE("boson_filter: resonance and double-zero limits") {
    // odd n at omega tau = pi: F -> n^2
    CHECK(boson_filter(1.0, kPi, 3) == doctest::Approx(9.0).epsilon(1e-9));
    CHECK(boson_filter(1.0, kPi, 5) == doctest::Approx(25.0).epsilon(1e-9));
    // simultaneous zeros of both dirichlet ratios are removable with limit 1
    CHECK(boson_filter(1.0, kPi / 2.0, 4) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("gamma_boson_periodic: n=1 is bit-identical to the free rate at tau") {
    const DiscretizedBath bath = tabulated_modes({{0.7, 0.4}, {1.9, 0.9}});
    const ThermalParams th = ThermalParams::inverse_temperature(2.0);
    for (double tau : {0.2, 0.7, 1.9, kPi})
        CHECK(gamma_boson_periodic(bath, th, tau, 1) == gamma_boson_free(bath, th, tau));
}

TEST_CASE("gamma_boson_periodic: regular through the even-n echo resonance") {
    const BathMode m{1.0, 0.5};
    const ThermalParams th = ThermalParams::zero_temperature();
    const double at = boson_pulsed_mode_exponent(m, th, kPi, 4);
    CHECK(at == doctest::Approx(16.0).epsilon(1e-12));  // 4 n^2 eta^2/omega^2 at the resonance
    for (double eps : {1e-3, 1e-5, 1e-7}) {
        CHECK(boson_pulsed_mode_exponent(m, th, kPi - eps, 4) == doctest::Approx(at).epsilon(1e-4));
        CHECK(boson_pulsed_mode_exponent(m, th, kPi + eps, 4) == doctest::Approx(at).epsilon(1e-4));
    }
}

TEST_CASE("gamma_boson_periodic matches the displacement engine") {
    const DiscretizedBath bath = tabulated_modes({{1.0, 1.0}});
    const ThermalParams th = ThermalParams::zero_temperature();
    const double tau = 0.3;
    const int n = 20;
    const double closed = std::exp(-double(n) * tau * gamma_boson_periodic(bath, th, tau, n));
    const double engine = coherence_boson_exact(bath, th, PulseSequence::periodic(tau, n));
    CHECK(closed == doctest::Approx(engine).epsilon(1e-8));
}

TEST_CASE("displacement_alpha: no pulses reproduces the closed amplitude up to phase") {
    const BathMode m{1.3, 0.8};
    for (double t : {0.4, 1.1, 2.9}) {
        const cplx a = displacement_alpha(m, PulseSequence::free_evolution(t));
        const cplx closed = m.eta * (1.0 - std::polar(1.0, m.omega * t)) / m.omega;
        CHECK(std::abs(std::abs(a) - std::abs(closed)) <= 1e-13);
        // the engine's value is i times the closed amplitude
        CHECK(std::abs(a - cplx(0.0, 1.0) * closed) <= 1e-13);
    }
}

TEST_CASE("displacement_alpha: echo filter 16 sin^4(omega T/4)/omega^2") {
    const BathMode m{1.0, 0.7};
    for (double total : {1.0, 2.0, 2.0 * kPi, 4.0 * kPi}) {
        const cplx a = displacement_alpha(m, PulseSequence::custom({total / 2.0}, total));
        const double expect = 16.0 * m.eta * m.eta * std::pow(std::sin(m.omega * total / 4.0), 4) /
                              (m.omega * m.omega);
        CHECK(std::norm(a) == doctest::Approx(expect).epsilon(1e-10));
    }
    // the echo refocuses completely at omega T = 4 pi, not at 2 pi
    CHECK(std::norm(displacement_alpha(m, PulseSequence::custom({2.0 * kPi}, 4.0 * kPi))) <= 1e-24);
    CHECK(std::norm(displacement_alpha(m, PulseSequence::custom({kPi}, 2.0 * kPi))) ==
          doctest::Approx(16.0 * m.eta * m.eta).epsilon(1e-12));
}

TEST_CASE("coherence_boson_exact: uncoupled bath stays fully coherent") {
    const DiscretizedBath bath = tabulated_modes({{0.5, 0.0}, {1.5, 0.0}});
    const PulseSequence seq = PulseSequence::custom({0.3, 0.8}, 1.5);
    CHECK(coherence_boson_exact(bath, ThermalParams::zero_temperature(), seq) == 1.0);
}

TEST_CASE("coherence_boson_exact: calibrated to the free rate at zero pulses") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u_w(0.1, 2.5), u_e(0.05, 1.0), u_t(0.1, 3.0);
    for (int i = 0; i < 40; ++i) {
        std::vector<std::pair<double, double>> pairs;
        for (int k = 0; k < 4; ++k) pairs.emplace_back(u_w(rng), u_e(rng));
        const DiscretizedBath bath = tabulated_modes(pairs);
        const ThermalParams th = (i % 2) ? ThermalParams::inverse_temperature(0.2 + 0.1 * i)
                                         : ThermalParams::zero_temperature();
        const double t = u_t(rng);
        const double via_engine = coherence_boson_exact(bath, th, PulseSequence::free_evolution(t));
        const double via_rate = std::exp(-boson_free_exponent(bath, th, t));
        CHECK(std::abs(via_engine - via_rate) <= 1e-12);
    }
}

TEST_CASE("coherence stays in (0, 1] for arbitrary sequences") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> u(0.05, 0.6);
    const DiscretizedBath bath = tabulated_modes({{0.4, 0.9}, {1.2, 0.5}, {2.0, 0.2}});
    for (int i = 0; i < 25; ++i) {
        std::vector<double> flips;
        double t = 0.0;
        for (int k = 0; k < 1 + i % 4; ++k) flips.push_back(t += u(rng));
        const PulseSequence seq = PulseSequence::custom(flips, t + u(rng));
        for (const ThermalParams& th :
             {ThermalParams::zero_temperature(), ThermalParams::inverse_temperature(0.4)}) {
            const double c = coherence_boson_exact(bath, th, seq);
            CHECK(c > 0.0);
            CHECK(c <= 1.0);
            const double cs = coherence_boson_standard(bath, th, seq);
            CHECK(cs > 0.0);
            CHECK(cs <= 1.0);
        }
    }
}

TEST_CASE("spin bath dephases at least as hard as the boson bath at zero temperature") {
    const DiscretizedBath bath =
        lorentzian_modes(LorentzianSpectrum::with_default_window(0.5, 0.8, 0.7, 60));
    const ThermalParams th = ThermalParams::zero_temperature();
    for (double t : uniform_time_grid(4.0, 40)) {
        if (t == 0.0) continue;
        CHECK(spin_free_exponent(bath, t) >= boson_free_exponent(bath, th, t) - 1e-12);
    }
}
