// csv.hpp — deterministic CSV emission: fixed 17-significant-digit floats, a
// leading comment line carrying the config hash and the active conventions, so
// identical configs produce byte-identical files.

#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dephasim {

inline std::string format_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hash_hex(std::string_view text) {
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(text)));
    return buf;
}

// The convention stamp written into every CSV header comment.
inline std::string convention_stamp() {
    return "spin_filter=cycle-spectral;spin_pairing=T=2n*tau;boson_pairing=T=n*tau;"
           "thermal=coth(beta*omega);engine_weight=coth(beta*omega)*cos^2(omega*T/2)";
}

class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::string& config_hash,
              const std::vector<std::string>& columns)
        : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot open output file: " + path);
        out_ << "# config=" << config_hash << " " << convention_stamp() << "\n";
        for (std::size_t i = 0; i < columns.size(); ++i)
            out_ << (i ? "," : "") << columns[i];
        out_ << "\n";
    }

    void row(const std::vector<double>& values) {
        for (std::size_t i = 0; i < values.size(); ++i)
            out_ << (i ? "," : "") << format_double(values[i]);
        out_ << "\n";
    }

    // Row with a leading integer column (zeno maps carry the pulse count).
    void comment(const std::string& text) { out_ << "# " << text << "\n"; }

  private:
    std::ofstream out_;
};

}  // namespace dephasim
