// run.hpp — task orchestration: build the bath from the config, run the task,
// emit CSV files. Exit codes: 0 success, 1 config error, 2 numerical error,
// 3 validation failure.

#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "dephasim/analysis.hpp"
#include "dephasim/bath_spectrum.hpp"
#include "dephasim/boson_bath.hpp"
#include "dephasim/config.hpp"
#include "dephasim/csv.hpp"
#include "dephasim/master_eq.hpp"
#include "dephasim/spin_bath.hpp"
#include "dephasim/validate.hpp"

namespace dephasim {

inline DiscretizedBath bath_from_config(const SpectrumConfig& sp) {
    if (sp.kind == "lorentzian") {
        LorentzianSpectrum spec = LorentzianSpectrum::with_default_window(sp.omega0, sp.gamma_c,
                                                                          sp.weight, sp.modes);
        if (sp.window) {
            spec.omega_lo = sp.window->first;
            spec.omega_hi = sp.window->second;
        }
        return lorentzian_modes(spec);
    }
    if (sp.kind == "one_over_f")
        return one_over_f_modes(sp.exponent, sp.window->first, sp.window->second, sp.modes, sp.weight);
    return tabulated_modes(sp.pairs);
}

inline PulseSequence sequence_from_config(const SequenceConfig& sq, double horizon) {
    if (sq.kind == "periodic") {
        const auto intervals = static_cast<std::size_t>(std::ceil(horizon / sq.tau));
        return PulseSequence::periodic(sq.tau, std::max<std::size_t>(intervals, 1));
    }
    if (sq.kind == "uhrig_standard")
        return PulseSequence::uhrig_standard(sq.total_time, std::size_t(sq.big_n));
    if (sq.kind == "uhrig_paper")
        return PulseSequence::uhrig_paper(sq.total_time, std::size_t(sq.big_n));
    return PulseSequence::custom(sq.times, sq.total_time);
}

namespace detail {

inline std::string out_path(const RunConfig& cfg, const std::string& file) {
    std::filesystem::create_directories(cfg.output_dir);
    return (std::filesystem::path(cfg.output_dir) / file).string();
}

inline bool wants_spin(const RunConfig& cfg) { return cfg.bath != BathSelection::boson; }
inline bool wants_boson(const RunConfig& cfg) { return cfg.bath != BathSelection::spin; }

inline void run_free_decay(const RunConfig& cfg, const DiscretizedBath& bath,
                           const std::string& hash) {
    const std::vector<double> grid = uniform_time_grid(cfg.t_max, cfg.samples);
    std::vector<std::string> cols{"t"};
    if (wants_spin(cfg)) cols.push_back("C_spin");
    if (wants_boson(cfg)) cols.push_back("C_boson");
    CsvWriter csv(out_path(cfg, "free_decay.csv"), hash, cols);
    DephasingResult spin, boson;
    if (wants_spin(cfg)) spin = free_decay_spin(bath, grid);
    if (wants_boson(cfg)) boson = free_decay_boson(bath, cfg.thermal, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::vector<double> row{grid[i]};
        if (wants_spin(cfg)) row.push_back(spin.coherence[i]);
        if (wants_boson(cfg)) row.push_back(boson.coherence[i]);
        csv.row(row);
    }
}

inline void run_pulsed_decay(const RunConfig& cfg, const DiscretizedBath& bath,
                             const std::string& hash) {
    const std::vector<double> grid = uniform_time_grid(cfg.t_max, cfg.samples);
    const PulseSequence full = sequence_from_config(*cfg.sequence, cfg.t_max);
    std::vector<std::string> cols{"t"};
    if (wants_spin(cfg)) cols.push_back("C_spin");
    if (wants_boson(cfg)) cols.push_back("C_boson");
    CsvWriter csv(out_path(cfg, "pulsed_decay.csv"), hash, cols);
    for (double t : grid) {
        std::vector<double> row{t};
        if (t == 0.0) {
            if (wants_spin(cfg)) row.push_back(1.0);
            if (wants_boson(cfg)) row.push_back(1.0);
        } else {
            const PulseSequence seq = full.truncated(t);
            if (wants_spin(cfg))
                row.push_back(std::abs(coherence_spin_pulsed(bath, cfg.thermal, seq)));
            if (wants_boson(cfg)) row.push_back(coherence_boson_exact(bath, cfg.thermal, seq));
        }
        csv.row(row);
    }
}

inline void run_zeno_map(const RunConfig& cfg, const DiscretizedBath& bath, const std::string& hash) {
    const ZenoConfig& z = *cfg.zeno;
    std::vector<double> taus(z.tau_count);
    for (std::size_t i = 0; i < z.tau_count; ++i)
        taus[i] = z.tau_count == 1
                      ? z.tau_min
                      : z.tau_min + (z.tau_max - z.tau_min) * double(i) / double(z.tau_count - 1);
    auto emit = [&](BathKind kind, const std::string& file) {
        const ZenoMap map = zeno_map(kind, bath, cfg.thermal, taus, z.n_values);
        CsvWriter csv(out_path(cfg, file), hash, {"tau", "n", "R"});
        for (std::size_t i = 0; i < map.tau_grid.size(); ++i)
            for (std::size_t j = 0; j < map.n_grid.size(); ++j)
                csv.row({map.tau_grid[i], double(map.n_grid[j]), map.ratios[map.index(i, j)]});
    };
    if (wants_spin(cfg)) emit(BathKind::spin, "zeno_map_spin.csv");
    if (wants_boson(cfg)) emit(BathKind::boson, "zeno_map_boson.csv");
}

inline void run_compare_me(const RunConfig& cfg, const DiscretizedBath& bath,
                           const std::string& hash) {
    const std::vector<double> grid = uniform_time_grid(cfg.t_max, cfg.samples);
    std::vector<std::string> cols{"t"};
    if (wants_spin(cfg)) {
        cols.push_back("exponent_spin_exact");
        cols.push_back("exponent_spin_me");
    }
    if (wants_boson(cfg)) {
        cols.push_back("exponent_boson_exact");
        cols.push_back("exponent_boson_me");
    }
    CsvWriter csv(out_path(cfg, "compare_me.csv"), hash, cols);
    const ValidityReport validity = validity_check(bath, cfg.me_spin_threshold);
    {
        char note[160];
        std::snprintf(note, sizeof note,
                      "validity: max eta/omega = %s, spin(threshold %g): %s, boson: %s",
                      format_double(validity.max_ratio).c_str(), validity.spin_threshold,
                      validity.spin_valid ? "valid" : "invalid",
                      validity.boson_valid ? "valid" : "invalid");
        csv.comment(note);
    }
    for (double t : grid) {
        std::vector<double> row{t};
        if (wants_spin(cfg)) {
            row.push_back(spin_free_exponent(bath, t));
            row.push_back(gamma_me_spin_free(bath, t));
        }
        if (wants_boson(cfg)) {
            const double exact = t > 0.0 ? boson_free_exponent(bath, cfg.thermal, t) : 0.0;
            row.push_back(exact);
            row.push_back(t > 0.0 ? gamma_me_boson(bath, cfg.thermal, t) * t : 0.0);
        }
        csv.row(row);
    }
}

inline int run_validate(const RunConfig& cfg, const std::string& hash) {
    const ValidationReport report = run_validation(cfg.fock_dimension);
    {
        std::ofstream txt(out_path(cfg, "validate_report.txt"), std::ios::binary);
        txt << validation_text(report);
    }
    {
        std::ofstream out(out_path(cfg, "validate_checks.csv"), std::ios::binary);
        out << "# config=" << hash << " " << convention_stamp() << "\n";
        out << "check,status,max_error\n";
        for (const auto& c : report.checks)
            out << c.name << "," << to_string(c.status) << "," << format_double(c.max_error) << "\n";
    }
    return report.all_passed() ? 0 : 3;
}

}  // namespace detail

// Execute a parsed config. Returns the process exit code.
inline int run(const RunConfig& cfg) {
    const std::string hash = hash_hex(cfg.raw_text);
    try {
        if (cfg.task == Task::validate) return detail::run_validate(cfg, hash);
        const DiscretizedBath bath = bath_from_config(*cfg.spectrum);
        switch (cfg.task) {
            case Task::free_decay: detail::run_free_decay(cfg, bath, hash); break;
            case Task::pulsed_decay: detail::run_pulsed_decay(cfg, bath, hash); break;
            case Task::zeno_map: detail::run_zeno_map(cfg, bath, hash); break;
            case Task::compare_me: detail::run_compare_me(cfg, bath, hash); break;
            case Task::validate: break;
        }
    } catch (const ConvergenceError&) {
        throw;  // numerical, mapped to exit 2 by the caller
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());  // construction errors stem from config values
    }
    return 0;
}

}  // namespace dephasim
