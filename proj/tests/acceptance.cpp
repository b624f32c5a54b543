// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "dephase/bessel.hpp"
#include "dephase/decoherence.hpp"
#include "dephase/random.hpp"
#include "dephase/scenario.hpp"
#include "dephase/sweep.hpp"
#include "oracles.hpp"

using namespace dephase;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char* f, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

// 1. quadrature |C| against pi alpha e d_y E0 |J1(w tau / 2)| with J1 from the
//    50-digit series.
Outcome elliptic_oracle() {
    const double alpha = 20.0, s = 50.0, v = 0.05, d_y = 1e-3, e0 = 0.4;
    const auto pair = build_elliptic_pair(alpha, s, v);
    const auto dipole = ParticleSpec::dipole_from_length(kUnitY, d_y);
    Outcome o;
    double worst = 0.0;
    for (double omega_tau : {1.0, 10.0, 100.0}) {
        const auto field = FieldConfig::plane_wave(e0, omega_tau / pair.flight_time());
        const double wt = field.angular_frequency() * pair.flight_time();
        const double expected = kPi * alpha * units::kElementaryCharge * d_y * e0 * std::abs(oracle::j1(0.5 * wt));
        const double got = extract_coefficients(dipole, field, pair, numerics::QuadratureSpec{}).c_modulus;
        const double rel = std::abs(got - expected) / expected;
        worst = std::max(worst, rel);
        o.pass = o.pass && rel < 1e-6;
    }
    o.detail = fmt("max relative error %.2e over w tau in {1, 10, 100}", worst);
    return o;
}

// 2. time average over emission time against J0(|C|).
Outcome overlap_identity() {
    numerics::SeededRng rng(20240607);
    const std::int64_t n_mc = 1'000'000;
    const double bound = 3.0 / std::sqrt(static_cast<double>(n_mc));
    double worst_grid = 0.0, worst_mc_ratio = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double modulus = 10.0 * rng.uniform();
        const double angle = 2.0 * kPi * rng.uniform();
        const double omega = 0.01 + rng.uniform();
        const auto c = PhaseCoefficients::from_components(modulus * std::cos(angle), modulus * std::sin(angle));
        const double j0 = oracle::j0(modulus);
        worst_grid = std::max(worst_grid, std::abs(time_average_oracle(c, omega, UniformGrid{10'000}) - j0));
        const auto mc = time_average_oracle(c, omega, MonteCarlo{n_mc, rng.next_u64()});
        worst_mc_ratio = std::max(worst_mc_ratio, std::abs(mc - j0) / bound);
    }
    return {worst_grid < 1e-6 && worst_mc_ratio < 1.0,
            fmt("grid max |dF| %.2e; Monte Carlo max |dF| = %.2f of 3/sqrt(N)", worst_grid, worst_mc_ratio)};
}

// 3. scaling laws on velocity sweeps.
Outcome scaling_laws() {
    const auto de = run_sweep(preset("dipole-elliptic-sec4"), SweepParameter::Speed, log_grid(1e-4, 1e-2, 60));
    const auto ee = run_sweep(preset("electron-elliptic-sec4"), SweepParameter::Speed, log_grid(1e-4, 1e-2, 60));
    const auto da = run_sweep(preset("dipole-asymmetric-sec4"), SweepParameter::Speed, log_grid(1e-4, 1e-1, 60));
    const double slope_d = de.slope_fit ? de.slope_fit->exponent : NAN;
    const double slope_e = ee.slope_fit ? ee.slope_fit->exponent : NAN;
    double hi = 0.0, lo = INFINITY;
    for (const auto& d : da.envelope_stats) {
        hi = std::max(hi, d.max_c_modulus);
        lo = std::min(lo, d.max_c_modulus);
    }
    const double spread = (hi - lo) / hi;
    Outcome o;
    o.pass = std::abs(slope_d - 0.5) <= 0.05 && std::abs(slope_e - 0.5) <= 0.05 && spread <= 0.2 &&
             da.envelope_stats.size() == 3;
    o.detail = fmt("elliptic slopes dipole %.4f, electron %.4f", slope_d, slope_e) +
               fmt("; asymmetric dipole decade-max spread %.3f over %.0f decades", spread,
                   static_cast<double>(da.envelope_stats.size()));
    return o;
}

// 4. preset magnitudes.
Outcome preset_magnitudes() {
    struct Range {
        const char* name;
        double lo, hi;
    };
    const Range ranges[] = {{"dipole-elliptic-sec4", 1e-4, 1e-2},
                            {"dipole-asymmetric-sec4", 1e-2, 1.0},
                            {"electron-elliptic-sec4", 0.5, INFINITY},
                            {"electron-asymmetric-sec4", 0.5, INFINITY},
                            {"fullerene-asymmetric-sec4", 0.3, 3.0}};
    Outcome o;
    for (const auto& r : ranges) {
        const double c = run_scenario(preset(r.name)).coefficients.c_modulus;
        const bool ok = c >= r.lo && c <= r.hi;
        o.pass = o.pass && ok;
        o.detail += std::string(o.detail.empty() ? "" : ", ") + r.name + fmt(" %.3g", c) + (ok ? "" : " (out of range)");
    }
    return o;
}

// 5. E0 tuned so that |C| is the first zero of J0.
Outcome complete_destruction() {
    const double j01 = oracle::first_zero_j0();
    auto s = preset("electron-elliptic-sec4");
    const auto base = run_scenario(s);
    const double e0 = base.amplitude * j01 / base.coefficients.c_modulus;
    s.field.flux.reset();
    s.field.amplitude = Quantity{e0, "natural"};
    const auto tuned = run_scenario(s);
    const double vis = tuned.decoherence.visibility;
    return {vis < 1e-6 && std::abs(tuned.coefficients.c_modulus - j01) < 1e-9,
            fmt("|C| = %.12f, visibility %.2e", tuned.coefficients.c_modulus, vis)};
}

// 6. Bessel accuracy against the 50-digit series.
Outcome bessel_accuracy() {
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double x = 50.0 * i / 499.0;
        worst = std::max(worst, std::abs(numerics::bessel_j0(x) - oracle::j0(x)));
        worst = std::max(worst, std::abs(numerics::bessel_j1(x) - oracle::j1(x)));
    }
    return {worst < 1e-12, fmt("max |error| %.2e at 500 points on [0, 50]", worst)};
}

// 7. gauge invariance for a charge on both built-in geometries.
Outcome gauge_invariance() {
    const auto field = FieldConfig::plane_wave(0.6, 0.05);
    const double w = field.angular_frequency();
    const auto electron = ParticleSpec::charged(-1.0);
    const GaugeFunction wave{[w](double t, const Vec3& r) { return std::sin(w * t - w * r.y); },
                             [w](double t, const Vec3& r) {
                                 const double c = std::cos(w * t - w * r.y);
                                 return FourVector{w * c, Vec3{0.0, -w * c, 0.0}};
                             },
                             w};
    const GaugeFunction static_xz{[](double, const Vec3& r) { return r.x * r.z; },
                                  [](double, const Vec3& r) { return FourVector{0.0, Vec3{r.z, 0.0, r.x}}; }};
    double worst = 0.0;
    for (const auto& pair : {build_elliptic_pair(8.0, 30.0, 0.1), build_asymmetric_pair(8.0, 30.0, 0.1)})
        for (const auto* g : {&wave, &static_xz})
            worst = std::max(worst, check_gauge_invariance(electron, field, pair, *g, numerics::QuadratureSpec{}));
    return {worst < 1e-9, fmt("max |dphi| %.2e rad (2 gauges x 2 geometries x 8 emission times)", worst)};
}

// 8. property suite.
Outcome properties() {
    const numerics::QuadratureSpec quad;
    const auto field = FieldConfig::plane_wave(0.5, 0.07);
    const auto dipole = ParticleSpec::dipole_from_length(kUnitY, 1e-3);
    const auto electron = ParticleSpec::charged(-1.0);
    double lin = 0.0, swap = 0.0;
    for (const auto& pair : {build_elliptic_pair(8.0, 30.0, 0.1), build_asymmetric_pair(8.0, 30.0, 0.1)}) {
        const double c = extract_coefficients(dipole, field, pair, quad).c_modulus;
        const double c_e = extract_coefficients(dipole, field.with_amplitude(1.0), pair, quad).c_modulus;
        const double c_d = extract_coefficients(dipole.scaled(2.0), field, pair, quad).c_modulus;
        lin = std::max({lin, std::abs(c_e / (2.0 * c) - 1.0), std::abs(c_d / (2.0 * c) - 1.0)});
        for (const auto& p : {dipole, electron}) {
            for (double t0 : {0.0, 4.0, 13.0}) {
                const double f = phase_at_emission(p, field, pair, t0, quad);
                const double r = phase_at_emission(p, field, pair.swapped(), t0, quad);
                swap = std::max(swap, std::abs(f + r));
            }
        }
    }
    const std::vector<Waypoint> arm{{0.0, {}}, {30.0, {2.0, 0, 0.5}}, {60.0, {3.0, 0, 0}}};
    const auto degenerate = build_piecewise_pair(arm, arm);
    double zero = 0.0;
    for (double t0 : {0.0, 1.0, 2.0})
        zero = std::max({zero, std::abs(phase_at_emission(electron, field, degenerate, t0, quad)),
                         std::abs(phase_at_emission(dipole, field, degenerate, t0, quad))});
    double vis = 0.0;
    for (int i = 0; i <= 10; ++i)
        vis = std::max(vis, std::abs(visibility(fringe_pattern(std::polar(0.1 * i, 0.3), 256, 2 * kPi)) - 0.1 * i));
    Outcome o;
    o.pass = lin < 1e-12 && swap == 0.0 && zero < 1e-12 && vis < 1e-3;
    o.detail = fmt("linearity %.1e, arm swap %.1e", lin, swap) + fmt(", degenerate loop %.1e, visibility %.1e", zero, vis);
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* title;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"analytic oracle, elliptic dipole", elliptic_oracle},
        {"overlap identity F = J0(|C|)", overlap_identity},
        {"velocity scaling laws", scaling_laws},
        {"preset orders of magnitude", preset_magnitudes},
        {"complete destruction at the first J0 zero", complete_destruction},
        {"Bessel accuracy", bessel_accuracy},
        {"gauge invariance", gauge_invariance},
        {"property suite", properties},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failures;
        std::printf("criterion %zu: %s - %s: %s [%.1fs]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].title,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
