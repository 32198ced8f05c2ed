// config.hpp — run-config parsing: a flat key = value format with [sections].
//
// Unknown sections or keys are errors, not warnings; missing required keys name
// the task that needs them. All errors carry the line number.

#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dephasim/types.hpp"

namespace dephasim {

struct ConfigError : std::runtime_error {
    ConfigError(const std::string& msg, int line)
        : std::runtime_error("config line " + std::to_string(line) + ": " + msg), line_number(line) {}
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg), line_number(0) {}
    int line_number;
};

enum class Task { free_decay, pulsed_decay, zeno_map, compare_me, validate };

inline const char* to_string(Task t) {
    switch (t) {
        case Task::free_decay: return "free-decay";
        case Task::pulsed_decay: return "pulsed-decay";
        case Task::zeno_map: return "zeno-map";
        case Task::compare_me: return "compare-me";
        case Task::validate: return "validate";
    }
    return "?";
}

enum class BathSelection { spin, boson, both };

struct SpectrumConfig {
    std::string kind;  // lorentzian | one_over_f | tabulated
    double omega0{0.0};
    double gamma_c{1.0};
    double weight{1.0};
    std::optional<std::pair<double, double>> window;
    std::size_t modes{200};
    double exponent{1.0};
    std::vector<std::pair<double, double>> pairs;
};

struct SequenceConfig {
    std::string kind;  // periodic | uhrig_standard | uhrig_paper | custom
    double tau{0.0};
    int n{0};
    double total_time{0.0};
    int big_n{0};
    std::vector<double> times;
};

struct ZenoConfig {
    double tau_min{0.0};
    double tau_max{0.0};
    std::size_t tau_count{0};
    std::vector<int> n_values;
};

struct RunConfig {
    Task task{Task::free_decay};
    std::string output_dir{"."};
    BathSelection bath{BathSelection::both};
    std::optional<SpectrumConfig> spectrum;
    ThermalParams thermal{};
    double t_max{0.0};
    std::size_t samples{0};
    std::optional<SequenceConfig> sequence;
    std::optional<ZenoConfig> zeno;
    int fock_dimension{64};
    double me_spin_threshold{0.1};
    std::string raw_text;  // hashed into every CSV header
};

namespace detail {

struct RawEntry {
    std::string value;
    int line;
    bool used{false};
};

using RawSection = std::map<std::string, RawEntry>;

inline std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

inline double parse_double(const RawEntry& e, const std::string& key) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(e.value, &pos);
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "' expects a number, got '" + e.value + "'", e.line);
    }
    if (pos != e.value.size())
        throw ConfigError("key '" + key + "' has trailing characters in '" + e.value + "'", e.line);
    return v;
}

inline std::vector<double> parse_double_list(const RawEntry& e, const std::string& key) {
    std::istringstream in(e.value);
    std::vector<double> vs;
    double v;
    while (in >> v) vs.push_back(v);
    if (!in.eof())
        throw ConfigError("key '" + key + "' expects space-separated numbers, got '" + e.value + "'",
                          e.line);
    return vs;
}

}  // namespace detail

// Parse the config text. `name` appears only in error messages.
inline RunConfig parse_config(const std::string& text) {
    using detail::RawEntry;
    using detail::RawSection;

    static const std::map<std::string, std::vector<std::string>> kSchema = {
        {"", {"task", "output"}},
        {"spectrum", {"kind", "omega0", "gamma_c", "weight", "window", "modes", "exponent", "pairs"}},
        {"bath", {"kind"}},
        {"thermal", {"beta"}},
        {"grid", {"t_max", "samples"}},
        {"sequence", {"kind", "tau", "n", "T", "N", "times"}},
        {"zeno", {"tau_min", "tau_max", "tau_count", "n_values"}},
        {"fock", {"cutoff"}},
        {"me", {"spin_threshold"}},
    };

    std::map<std::string, RawSection> raw;
    {
        std::istringstream in(text);
        std::string line;
        std::string section;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            const std::string s = detail::trim(line);
            if (s.empty() || s[0] == '#' || s[0] == ';') continue;
            if (s.front() == '[') {
                if (s.back() != ']') throw ConfigError("malformed section header '" + s + "'", line_no);
                section = detail::trim(s.substr(1, s.size() - 2));
                if (kSchema.find(section) == kSchema.end())
                    throw ConfigError("unknown section '" + section + "'", line_no);
                continue;
            }
            const std::size_t eq = s.find('=');
            if (eq == std::string::npos) throw ConfigError("expected 'key = value', got '" + s + "'", line_no);
            const std::string key = detail::trim(s.substr(0, eq));
            const std::string value = detail::trim(s.substr(eq + 1));
            const auto& allowed = kSchema.at(section);
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
                throw ConfigError("unknown key '" + key + "' in section [" + section + "]", line_no);
            if (raw[section].count(key)) throw ConfigError("duplicate key '" + key + "'", line_no);
            raw[section][key] = RawEntry{value, line_no, false};
        }
    }

    auto get = [&raw](const std::string& section, const std::string& key) -> RawEntry* {
        auto s = raw.find(section);
        if (s == raw.end()) return nullptr;
        auto k = s->second.find(key);
        if (k == s->second.end()) return nullptr;
        k->second.used = true;
        return &k->second;
    };

    RunConfig cfg;
    cfg.raw_text = text;

    RawEntry* task = get("", "task");
    if (!task) throw ConfigError("missing required key 'task'");
    if (task->value == "free-decay") cfg.task = Task::free_decay;
    else if (task->value == "pulsed-decay") cfg.task = Task::pulsed_decay;
    else if (task->value == "zeno-map") cfg.task = Task::zeno_map;
    else if (task->value == "compare-me") cfg.task = Task::compare_me;
    else if (task->value == "validate") cfg.task = Task::validate;
    else throw ConfigError("unknown task '" + task->value + "'", task->line);

    if (RawEntry* e = get("", "output")) cfg.output_dir = e->value;

    const bool needs_spectrum = cfg.task != Task::validate;
    const bool needs_grid =
        cfg.task == Task::free_decay || cfg.task == Task::pulsed_decay || cfg.task == Task::compare_me;

    auto require = [&](const std::string& section, const std::string& key) -> RawEntry* {
        RawEntry* e = get(section, key);
        if (!e)
            throw ConfigError(std::string("task '") + to_string(cfg.task) + "' requires key '" + key +
                              "' in section [" + section + "]");
        return e;
    };

    if (needs_spectrum) {
        SpectrumConfig sp;
        RawEntry* kind = require("spectrum", "kind");
        sp.kind = kind->value;
        if (sp.kind == "lorentzian" || sp.kind == "one_over_f") {
            if (sp.kind == "lorentzian") {
                if (RawEntry* e = get("spectrum", "omega0")) sp.omega0 = detail::parse_double(*e, "omega0");
                RawEntry* e = require("spectrum", "gamma_c");
                sp.gamma_c = detail::parse_double(*e, "gamma_c");
                if (!(sp.gamma_c > 0.0)) throw ConfigError("gamma_c must be > 0", e->line);
            } else {
                RawEntry* e = require("spectrum", "exponent");
                sp.exponent = detail::parse_double(*e, "exponent");
            }
            if (RawEntry* e = get("spectrum", "weight")) {
                sp.weight = detail::parse_double(*e, "weight");
                if (!(sp.weight > 0.0)) throw ConfigError("weight must be > 0", e->line);
            }
            if (RawEntry* e = get("spectrum", "window")) {
                const std::vector<double> w = detail::parse_double_list(*e, "window");
                if (w.size() != 2) throw ConfigError("window expects two numbers 'lo hi'", e->line);
                sp.window = {w[0], w[1]};
            }
            if (sp.kind == "one_over_f" && !sp.window)
                throw ConfigError("spectrum kind 'one_over_f' requires key 'window' in section [spectrum]");
            if (RawEntry* e = get("spectrum", "modes")) {
                const double m = detail::parse_double(*e, "modes");
                if (!(m >= 1.0)) throw ConfigError("modes must be >= 1", e->line);
                sp.modes = static_cast<std::size_t>(m);
            }
        } else if (sp.kind == "tabulated") {
            RawEntry* e = require("spectrum", "pairs");
            std::istringstream in(e->value);
            std::string chunk;
            while (std::getline(in, chunk, ';')) {
                std::istringstream pin(chunk);
                double omega, eta;
                if (!(pin >> omega >> eta))
                    throw ConfigError("pairs expects 'omega eta; omega eta; ...'", e->line);
                sp.pairs.emplace_back(omega, eta);
            }
            if (sp.pairs.empty()) throw ConfigError("pairs is empty", e->line);
        } else {
            throw ConfigError("unknown spectrum kind '" + sp.kind + "'", kind->line);
        }
        cfg.spectrum = std::move(sp);
    }

    if (RawEntry* e = get("bath", "kind")) {
        if (e->value == "spin") cfg.bath = BathSelection::spin;
        else if (e->value == "boson") cfg.bath = BathSelection::boson;
        else if (e->value == "both") cfg.bath = BathSelection::both;
        else throw ConfigError("bath kind must be spin|boson|both, got '" + e->value + "'", e->line);
    }

    if (RawEntry* e = get("thermal", "beta")) {
        if (e->value == "inf") {
            cfg.thermal = ThermalParams::zero_temperature();
        } else {
            const double beta = detail::parse_double(*e, "beta");
            if (!(beta > 0.0)) throw ConfigError("beta must be > 0 or 'inf'", e->line);
            cfg.thermal = ThermalParams::inverse_temperature(beta);
        }
    }

    if (needs_grid) {
        RawEntry* tm = require("grid", "t_max");
        cfg.t_max = detail::parse_double(*tm, "t_max");
        if (!(cfg.t_max > 0.0)) throw ConfigError("t_max must be > 0", tm->line);
        RawEntry* sm = require("grid", "samples");
        const double s = detail::parse_double(*sm, "samples");
        if (!(s >= 2.0)) throw ConfigError("samples must be >= 2", sm->line);
        cfg.samples = static_cast<std::size_t>(s);
    }

    if (cfg.task == Task::pulsed_decay) {
        SequenceConfig sq;
        RawEntry* kind = require("sequence", "kind");
        sq.kind = kind->value;
        if (sq.kind == "periodic") {
            RawEntry* e = require("sequence", "tau");
            sq.tau = detail::parse_double(*e, "tau");
            if (!(sq.tau > 0.0))
                throw ConfigError("pulsed-decay: sequence tau must be > 0", e->line);
        } else if (sq.kind == "uhrig_standard" || sq.kind == "uhrig_paper") {
            RawEntry* t = require("sequence", "T");
            sq.total_time = detail::parse_double(*t, "T");
            RawEntry* n = require("sequence", "N");
            sq.big_n = static_cast<int>(detail::parse_double(*n, "N"));
            if (sq.big_n < 1) throw ConfigError("sequence N must be >= 1", n->line);
        } else if (sq.kind == "custom") {
            RawEntry* t = require("sequence", "T");
            sq.total_time = detail::parse_double(*t, "T");
            RawEntry* ts = require("sequence", "times");
            sq.times = detail::parse_double_list(*ts, "times");
        } else {
            throw ConfigError("unknown sequence kind '" + sq.kind + "'", kind->line);
        }
        cfg.sequence = std::move(sq);
    }

    if (cfg.task == Task::zeno_map) {
        ZenoConfig z;
        RawEntry* lo = require("zeno", "tau_min");
        z.tau_min = detail::parse_double(*lo, "tau_min");
        RawEntry* hi = require("zeno", "tau_max");
        z.tau_max = detail::parse_double(*hi, "tau_max");
        if (!(z.tau_min > 0.0 && z.tau_max > z.tau_min))
            throw ConfigError("zeno needs 0 < tau_min < tau_max", hi->line);
        RawEntry* tc = require("zeno", "tau_count");
        const double c = detail::parse_double(*tc, "tau_count");
        if (!(c >= 1.0)) throw ConfigError("tau_count must be >= 1", tc->line);
        z.tau_count = static_cast<std::size_t>(c);
        RawEntry* nv = require("zeno", "n_values");
        for (double v : detail::parse_double_list(*nv, "n_values")) {
            if (!(v >= 1.0)) throw ConfigError("n_values must all be >= 1", nv->line);
            z.n_values.push_back(static_cast<int>(v));
        }
        if (z.n_values.empty()) throw ConfigError("n_values is empty", nv->line);
        cfg.zeno = std::move(z);
    }

    if (RawEntry* e = get("fock", "cutoff")) {
        const double d = detail::parse_double(*e, "cutoff");
        if (!(d >= 2.0)) throw ConfigError("fock cutoff must be >= 2", e->line);
        cfg.fock_dimension = static_cast<int>(d);
    }
    if (RawEntry* e = get("me", "spin_threshold")) {
        cfg.me_spin_threshold = detail::parse_double(*e, "spin_threshold");
        if (!(cfg.me_spin_threshold > 0.0)) throw ConfigError("spin_threshold must be > 0", e->line);
    }

    // Everything present must have been consumed by this task's schema walk.
    for (const auto& [section, entries] : raw)
        for (const auto& [key, entry] : entries)
            if (!entry.used)
                throw ConfigError("key '" + key + "' in section [" + section +
                                      "] is not used by task '" + to_string(cfg.task) + "'",
                                  entry.line);

    return cfg;
}

}  // namespace dephasim
