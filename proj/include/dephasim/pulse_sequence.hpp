// pulse_sequence.hpp — instantaneous pi-flip timings on [0, T].
//
// Flips live strictly inside (0, T). A flip exactly at T would only flip the qubit
// after the last evolution segment, which leaves |rho+-| unchanged, so generators
// emit interior flips only.

#pragma once

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dephasim {

enum class SequenceKind { custom, periodic, uhrig_standard, uhrig_paper };

inline const char* to_string(SequenceKind k) {
    switch (k) {
        case SequenceKind::custom: return "custom";
        case SequenceKind::periodic: return "periodic";
        case SequenceKind::uhrig_standard: return "uhrig_standard";
        case SequenceKind::uhrig_paper: return "uhrig_paper";
    }
    return "?";
}

class PulseSequence {
  public:
    // Empty sequence: free evolution for time T.
    static PulseSequence free_evolution(double total_time) {
        return PulseSequence({}, total_time, SequenceKind::custom);
    }

    static PulseSequence custom(std::vector<double> flips, double total_time) {
        return PulseSequence(std::move(flips), total_time, SequenceKind::custom);
    }

    // `intervals` equal segments of length tau, flips at j*tau for j = 1..intervals-1,
    // T = intervals * tau.
    static PulseSequence periodic(double tau, std::size_t intervals) {
        if (!(tau > 0.0)) throw std::invalid_argument("PulseSequence::periodic: tau must be > 0");
        if (intervals < 1) throw std::invalid_argument("PulseSequence::periodic: need at least one interval");
        std::vector<double> flips(intervals - 1);
        for (std::size_t j = 1; j < intervals; ++j) flips[j - 1] = double(j) * tau;
        return PulseSequence(std::move(flips), double(intervals) * tau, SequenceKind::periodic);
    }

    // Standard Uhrig timing: flips at T sin^2(j pi / (2N + 2)), j = 1..N.
    static PulseSequence uhrig_standard(double total_time, std::size_t n_pulses) {
        if (n_pulses < 1) throw std::invalid_argument("PulseSequence::uhrig_standard: need N >= 1");
        std::vector<double> flips(n_pulses);
        for (std::size_t j = 1; j <= n_pulses; ++j) {
            const double s = std::sin(double(j) * std::numbers::pi / (2.0 * double(n_pulses) + 2.0));
            flips[j - 1] = total_time * s * s;
        }
        return PulseSequence(std::move(flips), total_time, SequenceKind::uhrig_standard);
    }

    // Interval-form variant: segment lengths T sin^2(j pi / N), j = 1..N, accumulated
    // into flip times. As printed this recipe produces zero or out-of-range intervals
    // for every N; construction fails with a diagnostic rather than guessing intent.
    static PulseSequence uhrig_paper(double total_time, std::size_t n_pulses) {
        if (n_pulses < 1) throw std::invalid_argument("PulseSequence::uhrig_paper: need N >= 1");
        std::vector<double> flips(n_pulses);
        double acc = 0.0;
        for (std::size_t j = 1; j <= n_pulses; ++j) {
            const double s = std::sin(double(j) * std::numbers::pi / double(n_pulses));
            acc += total_time * s * s;
            flips[j - 1] = acc;
        }
        std::ostringstream diag;
        diag << "PulseSequence::uhrig_paper: interval recipe sin^2(j*pi/N) is invalid for N="
             << n_pulses << " (flip times";
        for (double t : flips) diag << ' ' << t;
        diag << " must be strictly increasing inside (0, " << total_time << "))";
        return PulseSequence(std::move(flips), total_time, SequenceKind::uhrig_paper, diag.str());
    }

    const std::vector<double>& flips() const { return flips_; }
    double total_time() const { return total_time_; }
    SequenceKind kind() const { return kind_; }
    std::size_t pulse_count() const { return flips_.size(); }

    // Segment durations between consecutive flips, including [0, t1] and [tn, T].
    std::vector<double> segment_durations() const {
        std::vector<double> seg;
        seg.reserve(flips_.size() + 1);
        double prev = 0.0;
        for (double t : flips_) {
            seg.push_back(t - prev);
            prev = t;
        }
        seg.push_back(total_time_ - prev);
        return seg;
    }

    // Restriction to [0, t): keeps flips strictly before t, new total time t.
    PulseSequence truncated(double t) const {
        if (!(t > 0.0)) throw std::invalid_argument("PulseSequence::truncated: t must be > 0");
        std::vector<double> kept;
        for (double f : flips_) {
            if (f < t) kept.push_back(f);
        }
        return PulseSequence(std::move(kept), t, kind_);
    }

  private:
    PulseSequence(std::vector<double> flips, double total_time, SequenceKind kind,
                  const std::string& diagnostic = {})
        : flips_(std::move(flips)), total_time_(total_time), kind_(kind) {
        if (!(total_time_ > 0.0) || !std::isfinite(total_time_))
            throw std::invalid_argument("PulseSequence: total time must be positive and finite");
        double prev = 0.0;
        for (double t : flips_) {
            if (!std::isfinite(t) || t <= prev || t >= total_time_) {
                throw std::invalid_argument(
                    diagnostic.empty()
                        ? "PulseSequence: flip times must be strictly increasing inside (0, T)"
                        : diagnostic);
            }
            prev = t;
        }
    }

    std::vector<double> flips_;
    double total_time_{0.0};
    SequenceKind kind_{SequenceKind::custom};
};

}  // namespace dephasim
