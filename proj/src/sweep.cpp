#include "dephase/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "dephase/errors.hpp"

namespace dephase {

const char* to_string(SweepParameter p) {
    switch (p) {
        case SweepParameter::Speed: return "v";
        case SweepParameter::Wavelength: return "lambda";
        case SweepParameter::Amplitude: return "E0";
        case SweepParameter::Separation: return "alpha";
    }
    return "?";
}

SweepParameter parse_sweep_parameter(const std::string& name) {
    for (auto p : {SweepParameter::Speed, SweepParameter::Wavelength, SweepParameter::Amplitude,
                   SweepParameter::Separation}) {
        if (name == to_string(p)) return p;
    }
    throw ConfigError("unknown sweep parameter '" + name + "' (expected v, lambda, E0 or alpha)");
}

const char* to_string(FitBasis b) { return b == FitBasis::RawSamples ? "raw" : "decade-maxima"; }

std::vector<double> log_grid(double from, double to, int n) {
    if (n < 2 || !(from > 0.0) || !(to > from) || !std::isfinite(to))
        throw DomainError("log_grid: need 0 < from < to and at least 2 points");
    std::vector<double> out(static_cast<std::size_t>(n));
    const double ratio = to / from;
    for (int i = 0; i < n; ++i) out[i] = from * std::pow(ratio, static_cast<double>(i) / (n - 1));
    out.front() = from;
    out.back() = to;
    return out;
}

std::vector<DecadeStats> decade_envelope(const std::vector<SweepSample>& samples) {
    std::vector<DecadeStats> out;
    if (samples.empty()) return out;
    const double origin = samples.front().parameter_value;
    const double top = samples.back().parameter_value;
    if (!(origin > 0.0)) throw DomainError("decade_envelope: parameter values must be positive");
    const int last = std::max(0, static_cast<int>(std::ceil(std::log10(top / origin) - 1e-12)) - 1);
    out.resize(static_cast<std::size_t>(last) + 1);
    for (int k = 0; k <= last; ++k) {
        out[k].decade_start = origin * std::pow(10.0, k);
        out[k].decade_end = origin * std::pow(10.0, k + 1);
    }
    for (const auto& s : samples) {
        int k = static_cast<int>(std::floor(std::log10(s.parameter_value / origin) + 1e-12));
        k = std::clamp(k, 0, last);
        auto& d = out[k];
        if (d.count == 0 || s.c_modulus > d.max_c_modulus) {
            d.max_c_modulus = s.c_modulus;
            d.argmax = s.parameter_value;
        }
        d.min_c_modulus = d.count == 0 ? s.c_modulus : std::min(d.min_c_modulus, s.c_modulus);
        ++d.count;
    }
    std::erase_if(out, [](const DecadeStats& d) { return d.count == 0; });
    return out;
}

SweepResult run_sweep(const Scenario& s, SweepParameter parameter, const std::vector<double>& grid) {
    if (grid.size() < 4) throw DomainError("run_sweep: grid needs at least 4 points");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0) || !std::isfinite(grid[i]))
            throw DomainError("run_sweep: grid values must be positive and finite");
        if (i > 0 && !(grid[i] > grid[i - 1])) throw DomainError("run_sweep: grid must be strictly increasing");
    }
    s.validate();
    const auto base = resolve(s);
    const auto& f = base.field;
    const double alpha = base.pair.separation();
    const double v = base.pair.speed();

    SweepResult out;
    out.scenario = s.name;
    out.swept_parameter = parameter;
    out.samples.reserve(grid.size());
    for (double x : grid) {
        PhaseCoefficients c;
        switch (parameter) {
            case SweepParameter::Speed:
                c = extract_coefficients(base.particle, f, rebuild_pair(s, alpha, x), s.quadrature);
                break;
            case SweepParameter::Separation:
                c = extract_coefficients(base.particle, f, rebuild_pair(s, x, v), s.quadrature);
                break;
            case SweepParameter::Amplitude:
                c = extract_coefficients(base.particle, f.with_amplitude(x), base.pair, s.quadrature);
                break;
            case SweepParameter::Wavelength:
                c = extract_coefficients(
                    base.particle,
                    FieldConfig::from_wavelength(f.amplitude(), x, f.propagation_axis(), f.polarization_axis()),
                    base.pair, s.quadrature);
                break;
        }
        out.samples.push_back({x, c.c_modulus, overlap_factor(c.c_modulus)});
    }
    out.envelope_stats = decade_envelope(out.samples);

    std::vector<numerics::Sample2D> pts;
    const bool oscillatory = parameter == SweepParameter::Speed || parameter == SweepParameter::Wavelength;
    if (oscillatory && out.envelope_stats.size() >= 2) {
        out.fit_basis = FitBasis::DecadeMaxima;
        for (const auto& d : out.envelope_stats) pts.push_back({d.argmax, d.max_c_modulus});
    } else {
        out.fit_basis = FitBasis::RawSamples;
        for (const auto& p : out.samples) pts.push_back({p.parameter_value, p.c_modulus});
    }
    if (std::all_of(pts.begin(), pts.end(), [](const auto& p) { return p.y > 0.0; }))
        out.slope_fit = numerics::fit_loglog_slope(pts);
    return out;
}

}  // namespace dephase
