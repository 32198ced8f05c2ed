#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dephasim/config.hpp"
#include "dephasim/run.hpp"

using namespace dephasim;

namespace {

const char* kMinimalFree = R"(task = free-decay
[spectrum]
kind = lorentzian
gamma_c = 1.0
[grid]
t_max = 2.0
samples = 20
)";

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("parse_config: a minimal free-decay config parses with defaults") {
    const RunConfig cfg = parse_config(kMinimalFree);
    CHECK(cfg.task == Task::free_decay);
    CHECK(cfg.bath == BathSelection::both);
    CHECK(cfg.thermal.zero_temp());
    CHECK(cfg.samples == 20);
    REQUIRE(cfg.spectrum.has_value());
    CHECK(cfg.spectrum->kind == "lorentzian");
}

TEST_CASE("parse_config: beta accepts 'inf' and positive numbers only") {
    const std::string base = std::string(kMinimalFree) + "[thermal]\nbeta = ";
    CHECK(parse_config(base + "inf\n").thermal.zero_temp());
    CHECK(parse_config(base + "2.5\n").thermal.beta == doctest::Approx(2.5));
    CHECK_THROWS_AS(parse_config(base + "-1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config(base + "zero\n"), ConfigError);
}

TEST_CASE("parse_config: pulsed-decay rejects a non-positive tau naming the line") {
    const std::string text = R"(task = pulsed-decay
[spectrum]
kind = tabulated
pairs = 1.0 0.5
[grid]
t_max = 2.0
samples = 20
[sequence]
kind = periodic
tau = -0.5
)";
    try {
        parse_config(text);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string what = e.what();
        CHECK(what.find("tau") != std::string::npos);
        CHECK(what.find("line 10") != std::string::npos);
    }
}

TEST_CASE("parse_config: unknown keys and sections are line-anchored errors") {
    CHECK_THROWS_AS(parse_config(std::string(kMinimalFree) + "[mystery]\nx = 1\n"), ConfigError);
    try {
        parse_config(std::string(kMinimalFree) + "[grid]\nstep = 0.1\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("unknown key 'step'") != std::string::npos);
    }
    // a known key that the task cannot use is also rejected, not ignored
    CHECK_THROWS_AS(parse_config(std::string(kMinimalFree) + "[sequence]\nkind = periodic\ntau = 1\n"),
                    ConfigError);
}

TEST_CASE("parse_config: missing required keys name the task") {
    try {
        parse_config("task = zeno-map\n[spectrum]\nkind = lorentzian\ngamma_c = 1\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string what = e.what();
        CHECK(what.find("zeno-map") != std::string::npos);
        CHECK(what.find("tau_min") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config("task = free-decay\n"), ConfigError);
    CHECK_THROWS_AS(parse_config(""), ConfigError);
    CHECK_THROWS_AS(parse_config("task = fly-me-to-the-moon\n"), ConfigError);
}

TEST_CASE("run: free-decay writes the documented columns") {
    const std::filesystem::path dir = std::filesystem::temp_directory_path() / "dephasim_run_test";
    std::filesystem::remove_all(dir);
    RunConfig cfg = parse_config(kMinimalFree);
    cfg.output_dir = dir.string();
    CHECK(run(cfg) == 0);
    const std::string csv = slurp(dir / "free_decay.csv");
    CHECK(csv.find("t,C_spin,C_boson") != std::string::npos);
    CHECK(csv.find("# config=") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("run: identical config reruns are byte-identical") {
    const std::filesystem::path base = std::filesystem::temp_directory_path() / "dephasim_det_test";
    std::filesystem::remove_all(base);
    RunConfig cfg = parse_config(kMinimalFree);
    cfg.output_dir = (base / "a").string();
    REQUIRE(run(cfg) == 0);
    cfg.output_dir = (base / "b").string();
    REQUIRE(run(cfg) == 0);
    CHECK(slurp(base / "a" / "free_decay.csv") == slurp(base / "b" / "free_decay.csv"));
    std::filesystem::remove_all(base);
}

TEST_CASE("run: config-level construction failures surface as config errors") {
    // one_over_f with a divergent low end is a config problem, not a crash
    const std::string text = R"(task = free-decay
[spectrum]
kind = one_over_f
exponent = 1.5
window = 0.0 10.0
[grid]
t_max = 1.0
samples = 10
)";
    RunConfig cfg = parse_config(text);
    CHECK_THROWS_AS(run(cfg), ConfigError);
}
