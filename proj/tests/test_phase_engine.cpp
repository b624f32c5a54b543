#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "dephase/decoherence.hpp"
#include "dephase/errors.hpp"
#include "dephase/phase_engine.hpp"
#include "oracles.hpp"

using namespace dephase;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kPi = std::numbers::pi;
const double kE = units::kElementaryCharge;
const numerics::QuadratureSpec kQuad{};

// Elliptic pair with constant longitudinal speed; z = w tau / 2. From
// int_{-1}^{1} u sin(z u) / sqrt(1 - u^2) du = pi J1(z):
//   dipole d_y:  phi(t0) =  pi alpha e d_y E0 J1(z) cos(z + w t0)
//   charge q:    phi(t0) =  pi alpha e q E0 J1(z) sin(z + w t0) / w
double elliptic_dipole_phase(double alpha, double d_y, double e0, double omega_tau, double xi) {
    const double z = 0.5 * omega_tau;
    return kPi * alpha * kE * d_y * e0 * oracle::j1(z) * std::cos(z + xi);
}

double elliptic_charge_phase(double alpha, double q, double e0, double omega, double omega_tau, double xi) {
    const double z = 0.5 * omega_tau;
    return kPi * alpha * kE * q * e0 * oracle::j1(z) * std::sin(z + xi) / omega;
}

struct EllipticSetup {
    double alpha = 20.0;
    double s = 50.0;
    double v = 0.05;
    double d_y = 1e-3;
    FieldConfig field = FieldConfig::plane_wave(0.4, 0.0);
    PathPair pair = build_elliptic_pair(20.0, 50.0, 0.05);

    explicit EllipticSetup(double omega_tau)
        : field(FieldConfig::plane_wave(0.4, omega_tau * 0.05 / 50.0)) {}
    double omega_tau() const { return field.angular_frequency() * pair.flight_time(); }
};

}  // namespace

TEST_CASE("zero field gives zero phase", "[phase]") {
    const auto field = FieldConfig::plane_wave(0.0, 0.3);
    const auto dipole = ParticleSpec::dipole_from_length(kUnitY, 1e-3);
    const auto electron = ParticleSpec::charged(-1.0);
    for (const auto& pair : {build_elliptic_pair(2.0, 5.0, 0.1), build_asymmetric_pair(2.0, 5.0, 0.1)}) {
        for (double t0 : {0.0, 1.3, -7.0}) {
            CHECK(phase_at_emission(dipole, field, pair, t0, kQuad) == 0.0);
            CHECK(phase_at_emission(electron, field, pair, t0, kQuad) == 0.0);
        }
        const auto c = extract_coefficients(dipole, field, pair, kQuad);
        CHECK(c.a == 0.0);
        CHECK(c.b == 0.0);
        CHECK(c.c_modulus == 0.0);
    }
}

TEST_CASE("identical arms cancel", "[phase]") {
    const std::vector<Waypoint> arm{{0.0, {}}, {30.0, {2.0, 0, 0.5}}, {60.0, {3.0, 0, 0}}};
    const auto pair = build_piecewise_pair(arm, arm);
    const auto field = FieldConfig::plane_wave(1.0, 0.8);
    for (double t0 : {0.0, 0.4, 2.2}) {
        CHECK(std::abs(phase_at_emission(ParticleSpec::charged(1.0), field, pair, t0, kQuad)) < 1e-12);
        CHECK(std::abs(phase_at_emission(ParticleSpec::dipole({0.3, 1e-3, 0.2}, {0.1, 0, 0}, 1e-3), field, pair, t0,
                                         kQuad)) < 1e-12);
    }
}

TEST_CASE("elliptic dipole phase matches the J1 closed form", "[phase]") {
    for (double omega_tau : {1.0, 10.0, 100.0}) {
        EllipticSetup s(omega_tau);
        const auto dipole = ParticleSpec::dipole_from_length(kUnitY, s.d_y);
        for (double xi : {0.0, 0.9, 2.0, 4.4}) {
            const double t0 = xi / s.field.angular_frequency();
            const double expected = elliptic_dipole_phase(s.alpha, s.d_y, s.field.amplitude(), s.omega_tau(), xi);
            const double scale = kPi * s.alpha * kE * s.d_y * s.field.amplitude() * std::abs(oracle::j1(0.5 * omega_tau));
            CHECK_THAT(phase_at_emission(dipole, s.field, s.pair, t0, kQuad), WithinAbs(expected, 1e-9 * scale));
        }
        const auto c = extract_coefficients(dipole, s.field, s.pair, kQuad);
        const auto reference = geometry_closed_form(dipole, s.field, s.pair);
        REQUIRE(reference.has_value());
        CHECK_THAT(c.c_modulus, WithinRel(*reference, 1e-6));
    }
}

TEST_CASE("elliptic charge phase matches the J1 closed form", "[phase]") {
    EllipticSetup s(10.0);
    const auto electron = ParticleSpec::charged(-1.0);
    const double w = s.field.angular_frequency();
    for (double xi : {0.0, 1.0, 3.0}) {
        const double expected = elliptic_charge_phase(s.alpha, -1.0, s.field.amplitude(), w, s.omega_tau(), xi);
        CHECK_THAT(phase_at_emission(electron, s.field, s.pair, xi / w, kQuad),
                   WithinRel(expected, 1e-8));
    }
}

TEST_CASE("staircase closed form", "[phase]") {
    const auto pair = build_asymmetric_pair(3.0, 40.0, 0.02, 0.05);
    const auto field = FieldConfig::plane_wave(0.2, 0.011);
    const auto dipole = ParticleSpec::dipole_from_length(kUnitY, 1e-3);
    const auto electron = ParticleSpec::charged(-1.0);
    for (const auto& p : {dipole, electron}) {
        const auto c = extract_coefficients(p, field, pair, kQuad);
        CHECK_THAT(c.c_modulus, WithinRel(*geometry_closed_form(p, field, pair), 1e-9));
    }
}

TEST_CASE("coefficients rotate under an emission-time shift", "[phase]") {
    EllipticSetup s(10.0);
    const auto dipole = ParticleSpec::dipole_from_length(kUnitY, s.d_y);
    const double w = s.field.angular_frequency();
    const auto c = extract_coefficients(dipole, s.field, s.pair, kQuad);
    const double delta = 0.77 / w;
    const auto shifted = coefficients_from_phase_function(
        [&](double xi) { return evaluate_loop_phase(dipole, s.field, s.pair, xi / w + delta, kQuad); });
    const auto rotated = c.shifted(w * delta);
    CHECK_THAT(shifted.a, WithinAbs(rotated.a, 1e-10 * c.c_modulus));
    CHECK_THAT(shifted.b, WithinAbs(rotated.b, 1e-10 * c.c_modulus));
    CHECK_THAT(shifted.c_modulus, WithinRel(c.c_modulus, 1e-10));
}

TEST_CASE("modulus and phase of C", "[phase]") {
    const auto c = PhaseCoefficients::from_components(3.0, -4.0);
    CHECK(c.c_modulus == 5.0);
    CHECK_THAT(c.c_modulus * c.c_modulus, WithinRel(c.a * c.a + c.b * c.b, 1e-12));
    CHECK_THAT(c.c_phase, WithinAbs(std::atan2(-4.0, 3.0), 0.0));
}

TEST_CASE("non-sinusoidal phase functions are rejected", "[phase]") {
    auto quadratic = [](double xi) { return PhaseEvaluation{xi * xi, 1e-12}; };
    CHECK_THROWS_AS(coefficients_from_phase_function(quadratic), FormViolationError);
    auto sinusoid = [](double xi) { return PhaseEvaluation{2.0 * std::cos(xi) - std::sin(xi), 1e-14}; };
    const auto c = coefficients_from_phase_function(sinusoid);
    CHECK_THAT(c.a, WithinAbs(2.0, 1e-15));
    CHECK_THAT(c.b, WithinAbs(-1.0, 1e-15));
}

TEST_CASE("gauge invariance of the charged loop phase", "[phase][gauge]") {
    const auto field = FieldConfig::plane_wave(0.6, 0.05);
    const auto electron = ParticleSpec::charged(-1.0);
    const double w = field.angular_frequency();

    const GaugeFunction zero{[](double, const Vec3&) { return 0.0; },
                             [](double, const Vec3&) { return FourVector{}; }};
    const GaugeFunction wave{[w](double t, const Vec3& r) { return std::sin(w * t - w * r.y); },
                             [w](double t, const Vec3& r) {
                                 const double c = std::cos(w * t - w * r.y);
                                 return FourVector{w * c, Vec3{0.0, -w * c, 0.0}};
                             },
                             w};
    const GaugeFunction static_xz{[](double, const Vec3& r) { return r.x * r.z; },
                                  [](double, const Vec3& r) { return FourVector{0.0, Vec3{r.z, 0.0, r.x}}; }};

    for (const auto& pair : {build_elliptic_pair(8.0, 30.0, 0.1), build_asymmetric_pair(8.0, 30.0, 0.1)}) {
        CHECK(check_gauge_invariance(electron, field, pair, zero, kQuad) == 0.0);
        CHECK(check_gauge_invariance(electron, field, pair, wave, kQuad) < 1e-9);
        CHECK(check_gauge_invariance(electron, field, pair, static_xz, kQuad) < 1e-9);
    }
    CHECK_THROWS_AS(check_gauge_invariance(ParticleSpec::dipole_from_length(kUnitY, 1e-3), field,
                                           build_elliptic_pair(1, 1, 0.1), zero, kQuad),
                    SpecificationError);
}

TEST_CASE("arm swap negates the phase", "[phase][property]") {
    const auto field = FieldConfig::plane_wave(0.5, 0.07);
    const auto dipole = ParticleSpec::dipole_from_length(kUnitY, 1e-3);
    const auto electron = ParticleSpec::charged(-1.0);
    for (const auto& pair : {build_elliptic_pair(8.0, 30.0, 0.1), build_asymmetric_pair(8.0, 30.0, 0.1)}) {
        for (const auto& p : {dipole, electron}) {
            for (double t0 : {0.0, 5.0, 17.0}) {
                const double forward = phase_at_emission(p, field, pair, t0, kQuad);
                const double reverse = phase_at_emission(p, field, pair.swapped(), t0, kQuad);
                CHECK(reverse == -forward);
            }
            CHECK(extract_coefficients(p, field, pair.swapped(), kQuad).c_modulus ==
                  extract_coefficients(p, field, pair, kQuad).c_modulus);
        }
    }
}

TEST_CASE("linearity in field amplitude and dipole moment", "[phase][property]") {
    const auto field = FieldConfig::plane_wave(0.5, 0.07);
    const auto dipole = ParticleSpec::dipole_from_length(kUnitY, 1e-3);
    for (const auto& pair : {build_elliptic_pair(8.0, 30.0, 0.1), build_asymmetric_pair(8.0, 30.0, 0.1)}) {
        const auto base = extract_coefficients(dipole, field, pair, kQuad);
        const auto doubled_field = extract_coefficients(dipole, field.with_amplitude(1.0), pair, kQuad);
        CHECK_THAT(doubled_field.a, WithinRel(2.0 * base.a, 1e-12));
        CHECK_THAT(doubled_field.b, WithinRel(2.0 * base.b, 1e-12));
        CHECK_THAT(doubled_field.c_modulus, WithinRel(2.0 * base.c_modulus, 1e-12));
        const auto doubled_dipole = extract_coefficients(dipole.scaled(2.0), field, pair, kQuad);
        CHECK_THAT(doubled_dipole.c_modulus, WithinRel(2.0 * base.c_modulus, 1e-12));
        const auto tripled_dipole = extract_coefficients(dipole.scaled(3.0), field, pair, kQuad);
        CHECK_THAT(tripled_dipole.c_modulus, WithinRel(3.0 * base.c_modulus, 1e-12));
    }
}

TEST_CASE("temporal term cancels for arms sharing a time parameterization", "[phase][property]") {
    const auto field = FieldConfig::plane_wave(0.5, 0.07);
    // d_z couples through a0 = -d.E; d_y through the spatial part.
    const auto dipole = ParticleSpec::dipole({0.0, 1e-3, 2e-3}, {1e-3, 0.0, 0.0}, 1e-3);
    const std::vector<Waypoint> low{{0.0, {}}, {100.0, {5.0, 0, -2.0}}, {300.0, {10.0, 0, 0}}};
    const std::vector<Waypoint> high{{0.0, {}}, {100.0, {4.0, 0, 3.0}}, {300.0, {10.0, 0, 0}}};
    for (const auto& pair : {build_elliptic_pair(8.0, 30.0, 0.1), build_piecewise_pair(low, high)}) {
        for (double t0 : {0.0, 3.0, 11.0}) {
            const double temporal = evaluate_loop_phase(dipole, field, pair, t0, kQuad, LoopTerm::Temporal).phase;
            const double spatial = evaluate_loop_phase(dipole, field, pair, t0, kQuad, LoopTerm::Spatial).phase;
            CHECK(std::abs(temporal) < 1e-12 * std::abs(spatial));
        }
    }
}

TEST_CASE("tighter tolerance moves toward the analytic value", "[phase][property]") {
    EllipticSetup s(40.0);
    const auto dipole = ParticleSpec::dipole_from_length(kUnitY, s.d_y);
    const double exact = std::abs(elliptic_dipole_phase(s.alpha, s.d_y, s.field.amplitude(), s.omega_tau(), 0.0)) /
                         std::abs(std::cos(0.5 * s.omega_tau())) ;
    double previous = std::numeric_limits<double>::infinity();
    for (double tol = 1e-3; tol > 1e-13; tol *= 0.5) {
        numerics::QuadratureSpec q;
        q.nodes_per_panel = 4;
        q.relative_tolerance = tol;
        const double err = std::abs(extract_coefficients(dipole, s.field, s.pair, q).c_modulus - exact);
        CHECK(err <= previous + 1e-14 * exact);
        previous = std::min(previous, err);
    }
    CHECK(previous < 1e-10 * exact);
}
