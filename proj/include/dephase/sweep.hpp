#pragma once

// Parameter sweeps over a scenario with log-log slope fits. C_modulus
// oscillates in v (and lambda) through w tau = 2 pi s' / (v lambda), so those
// sweeps fit per-decade maxima of C_modulus rather than the raw samples.

#include <optional>
#include <string>
#include <vector>

#include "dephase/fit.hpp"
#include "dephase/scenario.hpp"

namespace dephase {

enum class SweepParameter { Speed, Wavelength, Amplitude, Separation };

// "v", "lambda", "E0", "alpha"; parsing throws ConfigError.
const char* to_string(SweepParameter p);
SweepParameter parse_sweep_parameter(const std::string& name);

struct SweepSample {
    double parameter_value = 0.0;  // natural units
    double c_modulus = 0.0;
    double overlap_factor = 1.0;

    friend bool operator==(const SweepSample&, const SweepSample&) = default;
};

// Bin [decade_start, decade_end); the last bin also holds the final grid point.
struct DecadeStats {
    double decade_start = 0.0;
    double decade_end = 0.0;
    double max_c_modulus = 0.0;
    double min_c_modulus = 0.0;
    double argmax = 0.0;  // parameter value of the maximum
    int count = 0;

    friend bool operator==(const DecadeStats&, const DecadeStats&) = default;
};

enum class FitBasis { RawSamples, DecadeMaxima };
const char* to_string(FitBasis b);

struct SweepResult {
    std::string scenario;
    SweepParameter swept_parameter = SweepParameter::Speed;
    std::vector<SweepSample> samples;
    std::optional<numerics::SlopeFit> slope_fit;
    FitBasis fit_basis = FitBasis::RawSamples;
    std::vector<DecadeStats> envelope_stats;

    friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

// n log-spaced points from `from` to `to` inclusive (n >= 2, 0 < from < to).
std::vector<double> log_grid(double from, double to, int n);

// Decades anchored at grid.front(). Requires a positive increasing grid.
std::vector<DecadeStats> decade_envelope(const std::vector<SweepSample>& samples);

// Grid values in natural units: v in c, lambda and alpha in um, E0 natural.
// The grid must be strictly increasing, positive and hold >= 4 points
// (DomainError otherwise). The slope fit is omitted when a C_modulus is 0.
SweepResult run_sweep(const Scenario& s, SweepParameter parameter, const std::vector<double>& grid);

}  // namespace dephase
