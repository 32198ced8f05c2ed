// analysis.hpp — Zeno/anti-Zeno characterization: enhancement ratios, (tau, n)
// maps, crossover search, and short-time decay-shape classification.
//
// Comparisons are made at equal elapsed time: for the spin kind n counts pulse
// pairs (T = 2 n tau), for the boson kind n counts intervals (T = n tau), matching
// the respective closed forms. Ratios are built from coherence moduli in log space;
// the complete-dephasing sentinel never enters a difference.

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "dephasim/boson_bath.hpp"
#include "dephasim/parallel.hpp"
#include "dephasim/spin_bath.hpp"
#include "dephasim/types.hpp"

namespace dephasim {

enum class BathKind { spin, boson };

inline const char* to_string(BathKind k) { return k == BathKind::spin ? "spin" : "boson"; }

inline double total_control_time(BathKind kind, double tau, int n) {
    return kind == BathKind::spin ? 2.0 * double(n) * tau : double(n) * tau;
}

// ln C under free evolution for time T; -inf marks complete dephasing.
inline double log_coherence_free(BathKind kind, const DiscretizedBath& bath,
                                 const ThermalParams& thermal, double t) {
    if (t == 0.0) return 0.0;
    return kind == BathKind::spin ? -spin_free_exponent(bath, t)
                                  : -boson_free_exponent(bath, thermal, t);
}

// ln C under n periodic control units at interval tau.
inline double log_coherence_controlled(BathKind kind, const DiscretizedBath& bath,
                                       const ThermalParams& thermal, double tau, int n) {
    return kind == BathKind::spin ? -spin_periodic_exponent(bath, tau, n)
                                  : -boson_periodic_exponent(bath, thermal, tau, n);
}

// Coherence-enhancement ratio R = C_controlled(T) / C_free(T). R > 1 means the
// control suppresses dephasing (Zeno side), R < 1 means it enhances it (anti-Zeno).
// Cells where the free coherence is already at the floor carry no information and
// come back masked.
struct Enhancement {
    double ratio{std::numeric_limits<double>::quiet_NaN()};
    double log_ratio{std::numeric_limits<double>::quiet_NaN()};
    bool masked{true};
};

inline Enhancement enhancement_ratio(BathKind kind, const DiscretizedBath& bath,
                                     const ThermalParams& thermal, double tau, int n) {
    if (!(tau > 0.0)) throw std::invalid_argument("enhancement_ratio: tau must be > 0");
    if (n < 1) throw std::invalid_argument("enhancement_ratio: need n >= 1");
    const double t = total_control_time(kind, tau, n);
    const double log_free = log_coherence_free(kind, bath, thermal, t);
    if (!(log_free > std::log(kCompleteDephasingFloor))) return {};
    const double log_ctrl = log_coherence_controlled(kind, bath, thermal, tau, n);
    Enhancement e;
    e.log_ratio = log_ctrl - log_free;
    e.ratio = std::exp(e.log_ratio);
    e.masked = false;
    return e;
}

// Dense (tau, n) map of enhancement ratios. Cells are evaluated in parallel and
// written by index, so the map is bit-identical across runs and thread counts.
struct ZenoMap {
    BathKind kind{BathKind::boson};
    std::vector<double> tau_grid;
    std::vector<int> n_grid;
    std::vector<double> ratios;      // row-major [tau][n]
    std::vector<double> log_ratios;  // same layout
    std::vector<char> masked;        // same layout

    std::size_t index(std::size_t i_tau, std::size_t i_n) const { return i_tau * n_grid.size() + i_n; }
};

inline ZenoMap zeno_map(BathKind kind, const DiscretizedBath& bath, const ThermalParams& thermal,
                        std::vector<double> tau_grid, std::vector<int> n_grid) {
    if (tau_grid.empty() || n_grid.empty()) throw std::invalid_argument("zeno_map: empty grid");
    for (std::size_t i = 1; i < tau_grid.size(); ++i)
        if (!(tau_grid[i] > tau_grid[i - 1])) throw std::invalid_argument("zeno_map: tau grid must increase");
    ZenoMap map;
    map.kind = kind;
    map.tau_grid = std::move(tau_grid);
    map.n_grid = std::move(n_grid);
    const std::size_t cells = map.tau_grid.size() * map.n_grid.size();
    map.ratios.assign(cells, 0.0);
    map.log_ratios.assign(cells, 0.0);
    map.masked.assign(cells, 0);
    parallel_for(cells, [&](std::size_t c) {
        const std::size_t i_tau = c / map.n_grid.size();
        const std::size_t i_n = c % map.n_grid.size();
        const Enhancement e =
            enhancement_ratio(kind, bath, thermal, map.tau_grid[i_tau], map.n_grid[i_n]);
        map.ratios[c] = e.ratio;
        map.log_ratios[c] = e.log_ratio;
        map.masked[c] = e.masked ? 1 : 0;
    });
    return map;
}

// First Zeno -> anti-Zeno sign change of R - 1, scanning tau upward through the
// bracket and bisecting the first crossing to the requested relative width.
struct CrossoverResult {
    bool found{false};
    double tau_star{0.0};
    std::string note;
};

inline CrossoverResult crossover_interval(BathKind kind, const DiscretizedBath& bath,
                                          const ThermalParams& thermal, int n, double tau_lo,
                                          double tau_hi, std::size_t scan_points = 64,
                                          double rel_tol = 1e-4) {
    if (!(tau_lo > 0.0 && tau_hi > tau_lo))
        throw std::invalid_argument("crossover_interval: need 0 < tau_lo < tau_hi");
    if (scan_points < 2) throw std::invalid_argument("crossover_interval: need at least 2 scan points");

    auto log_ratio_at = [&](double tau) {
        return enhancement_ratio(kind, bath, thermal, tau, n);
    };

    // Scan for the first adjacent unmasked pair with a sign change.
    double a = 0.0, b = 0.0, ga = 0.0, gb = 0.0;
    bool have_prev = false, bracketed = false;
    double prev_tau = 0.0, prev_g = 0.0;
    for (std::size_t i = 0; i < scan_points; ++i) {
        const double tau = tau_lo + (tau_hi - tau_lo) * double(i) / double(scan_points - 1);
        const Enhancement e = log_ratio_at(tau);
        if (e.masked) {
            have_prev = false;
            continue;
        }
        if (have_prev && prev_g > 0.0 && e.log_ratio <= 0.0) {
            a = prev_tau;
            ga = prev_g;
            b = tau;
            gb = e.log_ratio;
            bracketed = true;
            break;
        }
        if (have_prev && prev_g < 0.0 && e.log_ratio >= 0.0) {
            // Entered the bracket already on the anti-Zeno side; the first crossing
            // from the decoupling side is what we are after, keep scanning.
        }
        have_prev = true;
        prev_tau = tau;
        prev_g = e.log_ratio;
    }
    if (!bracketed) return {false, 0.0, "no Zeno->anti-Zeno sign change in bracket"};

    for (int it = 0; it < 200 && (b - a) > rel_tol * 0.5 * (a + b); ++it) {
        const double mid = 0.5 * (a + b);
        const Enhancement e = log_ratio_at(mid);
        if (e.masked) return {false, mid, "masked region inside bisection bracket"};
        if (e.log_ratio > 0.0) {
            a = mid;
            ga = e.log_ratio;
        } else {
            b = mid;
            gb = e.log_ratio;
        }
    }
    (void)ga;
    (void)gb;
    return {true, 0.5 * (a + b), {}};
}

// Short-time decay-shape classification: compares least-squares fits of -ln C
// against t (exponential) and t^2 (gaussian) over the window C > c_floor, t > 0.
enum class DecayShape { gaussian, exponential, indeterminate };

inline const char* to_string(DecayShape s) {
    switch (s) {
        case DecayShape::gaussian: return "gaussian";
        case DecayShape::exponential: return "exponential";
        case DecayShape::indeterminate: return "indeterminate";
    }
    return "?";
}

struct ShapeFit {
    DecayShape shape{DecayShape::indeterminate};
    double quality_gaussian{0.0};     // R^2-style score of the t^2 fit
    double quality_exponential{0.0};  // R^2-style score of the t fit
    double coeff_gaussian{0.0};
    double coeff_exponential{0.0};
    std::size_t window_samples{0};
};

inline ShapeFit short_time_shape(const DephasingResult& result, double c_floor = 0.9,
                                 double quality_gate = 0.99) {
    std::vector<double> t, y;
    for (std::size_t i = 0; i < result.times.size(); ++i) {
        if (result.times[i] > 0.0 && result.coherence[i] > c_floor) {
            t.push_back(result.times[i]);
            y.push_back(-std::log(result.coherence[i]));
        }
    }
    if (t.size() < 10)
        throw std::invalid_argument("short_time_shape: needs >= 10 samples with C above the floor");

    double mean_y = 0.0;
    for (double v : y) mean_y += v;
    mean_y /= double(y.size());
    double ss_tot = 0.0;
    for (double v : y) ss_tot += (v - mean_y) * (v - mean_y);

    auto fit_power = [&](int power, double& coeff) {
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            const double basis = power == 1 ? t[i] : t[i] * t[i];
            num += basis * y[i];
            den += basis * basis;
        }
        coeff = den > 0.0 ? num / den : 0.0;
        double ss_res = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            const double basis = power == 1 ? t[i] : t[i] * t[i];
            const double r = y[i] - coeff * basis;
            ss_res += r * r;
        }
        return ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 0.0;
    };

    ShapeFit fit;
    fit.window_samples = t.size();
    fit.quality_exponential = fit_power(1, fit.coeff_exponential);
    fit.quality_gaussian = fit_power(2, fit.coeff_gaussian);
    const double best = std::max(fit.quality_exponential, fit.quality_gaussian);
    if (best < quality_gate)
        fit.shape = DecayShape::indeterminate;
    else
        fit.shape = fit.quality_gaussian >= fit.quality_exponential ? DecayShape::gaussian
                                                                    : DecayShape::exponential;
    return fit;
}

}  // namespace dephasim
