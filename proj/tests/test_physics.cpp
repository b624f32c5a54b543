#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "dephase/errors.hpp"
#include "dephase/physics.hpp"

using namespace dephase;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kPi = std::numbers::pi;

void check_vec(const Vec3& a, const Vec3& b, double tol) {
    CHECK_THAT(a.x, WithinAbs(b.x, tol));
    CHECK_THAT(a.y, WithinAbs(b.y, tol));
    CHECK_THAT(a.z, WithinAbs(b.z, tol));
}

const FieldConfig kField = FieldConfig::plane_wave(2.5, 0.7);

}  // namespace

TEST_CASE("plane wave values", "[field]") {
    const double e0 = kField.amplitude();
    const double w = kField.angular_frequency();

    auto s = eval_field(kField, Vec3{}, 0.0, 0.0);
    check_vec(s.E, Vec3{}, 0.0);
    check_vec(s.B, Vec3{}, 0.0);

    s = eval_field(kField, Vec3{}, 0.5 * kPi / w, 0.0);
    check_vec(s.E, Vec3{0, 0, e0}, 1e-15);
    check_vec(s.B, Vec3{e0, 0, 0}, 1e-15);

    s = eval_field(kField, Vec3{}, 0.0, 0.5 * kPi / w);
    check_vec(s.E, Vec3{0, 0, e0}, 1e-15);
}

TEST_CASE("wavelength is derived from the frequency", "[field]") {
    CHECK_THAT(kField.wavelength() * kField.angular_frequency(), WithinAbs(2.0 * kPi, 1e-15));
    CHECK(kField.wave_number() == kField.angular_frequency());
    const auto f = FieldConfig::from_wavelength(1.0, 100.0);
    CHECK_THAT(f.angular_frequency(), WithinRel(2.0 * kPi / 100.0, 1e-15));
}

TEST_CASE("field construction errors", "[field]") {
    CHECK_THROWS_AS(FieldConfig::plane_wave(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(FieldConfig::plane_wave(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(FieldConfig::plane_wave(1.0, 1.0, kUnitY, Vec3{0, 1, 1}), DomainError);
    CHECK_THROWS_AS(FieldConfig::plane_wave(1.0, 1.0, Vec3{}, kUnitZ), DomainError);
}

TEST_CASE("E perpendicular to B with equal magnitude", "[field][property]") {
    const auto tilted = FieldConfig::plane_wave(1.3, 2.0, Vec3{1, 1, 0}, Vec3{1, -1, 0.0});
    for (const auto& field : {kField, tilted}) {
        for (int i = 0; i < 50; ++i) {
            const Vec3 r{0.37 * i, -1.1 * i + 3.0, 0.05 * i * i};
            const auto s = eval_field(field, r, 0.13 * i, -0.4 * i);
            CHECK(std::abs(dot(s.E, s.B)) < 1e-12);
            CHECK(std::abs(norm(s.E) - norm(s.B)) < 1e-12);
        }
    }
}

TEST_CASE("emission offset enters only as a time shift", "[field][property]") {
    for (int i = 0; i < 20; ++i) {
        const Vec3 r{0.1 * i, 0.3 * i, -0.2 * i};
        const double t = 0.7 * i;
        const double t0 = 1.9 - 0.45 * i;
        const auto a = eval_field(kField, r, t, t0);
        const auto b = eval_field(kField, r, t + t0, 0.0);
        CHECK(a.E == b.E);
        CHECK(a.B == b.B);
    }
}

TEST_CASE("gauge potential at the origin", "[gauge]") {
    const auto a = gauge_potential(kField, Vec3{}, 0.0, 0.0);
    CHECK(a.time == 0.0);
    CHECK_THAT(a.space.z, WithinRel(kField.amplitude() / kField.angular_frequency(), 1e-15));
}

TEST_CASE("E = -dA/dt and B = curl A by finite differences", "[gauge][property]") {
    const double w = kField.angular_frequency();
    const double h = 1e-6 / w;
    const double scale = kField.amplitude();
    auto A = [&](const Vec3& r, double t) { return gauge_potential(kField, r, t, 0.3).space; };

    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const double t = (i == 0 && j == 0) ? 1.0 / w : 0.9 * i;
            const Vec3 r{0.2, 1.3 * j, -0.4};
            const auto sample = eval_field(kField, r, t, 0.3);

            const Vec3 e_fd = (A(r, t + h) - A(r, t - h)) * (-0.5 / h);
            CHECK(norm(e_fd - sample.E) < 1e-6 * scale);

            auto d = [&](const Vec3& axis) { return (A(r + axis * h, t) - A(r - axis * h, t)) * (0.5 / h); };
            const Vec3 dx = d(kUnitX);
            const Vec3 dy = d(kUnitY);
            const Vec3 dz = d(kUnitZ);
            const Vec3 curl{dy.z - dz.y, dz.x - dx.z, dx.y - dy.x};
            CHECK(norm(curl - sample.B) < 1e-6 * scale);
        }
    }
}

TEST_CASE("Aharonov-Casher connection components", "[connection]") {
    const double e0 = 1.7;
    const double dy = 0.3;
    const double dz = 0.8;
    const double mx = 0.6;

    // y x x = -z, d.E = 0
    auto a = ac_connection(ParticleSpec::dipole({0, dy, 0}, {}, 1.0), {{0, 0, e0}, {e0, 0, 0}});
    CHECK(a.time == 0.0);
    check_vec(a.space, Vec3{0, 0, -dy * e0}, 1e-16);

    a = ac_connection(ParticleSpec::dipole({0, 0, dz}, {}, 1.0), {{0, 0, e0}, {}});
    CHECK_THAT(a.time, WithinAbs(-dz * e0, 1e-16));
    check_vec(a.space, Vec3{}, 0.0);

    a = ac_connection(ParticleSpec::dipole({}, {mx, 0, 0}, 1.0), {{}, {e0, 0, 0}});
    CHECK_THAT(a.time, WithinAbs(-mx * e0, 1e-16));
    check_vec(a.space, Vec3{}, 0.0);

    CHECK_THROWS_AS(ac_connection(ParticleSpec::charged(-1.0), {{}, {}}), SpecificationError);
}

TEST_CASE("connection is linear in dipoles and fields", "[connection][property]") {
    const auto p = ParticleSpec::dipole({0.1, -0.4, 0.7}, {0.3, 0.2, -0.5}, 1.0);
    const FieldSample s{{0.2, 1.0, -0.3}, {-0.6, 0.1, 0.9}};
    const auto base = ac_connection(p, s);
    const auto scaled_p = ac_connection(p.scaled(3.0), s);
    const auto scaled_s = ac_connection(p, {s.E * -2.0, s.B * -2.0});
    CHECK_THAT(scaled_p.time, WithinRel(3.0 * base.time, 1e-14));
    check_vec(scaled_p.space, base.space * 3.0, 1e-14);
    CHECK_THAT(scaled_s.time, WithinRel(-2.0 * base.time, 1e-14));
    check_vec(scaled_s.space, base.space * -2.0, 1e-14);

    // Superposition of two dipoles
    const auto q = ParticleSpec::dipole({-0.5, 0.2, 0.0}, {0.0, 0.8, 0.1}, 1.0);
    const auto sum = ParticleSpec::dipole(p.electric_dipole() + q.electric_dipole(),
                                          p.magnetic_dipole() + q.magnetic_dipole(), 1.0);
    const auto aq = ac_connection(q, s);
    const auto asum = ac_connection(sum, s);
    CHECK_THAT(asum.time, WithinAbs(base.time + aq.time, 1e-14));
    check_vec(asum.space, base.space + aq.space, 1e-14);
}

TEST_CASE("particle specs", "[particle]") {
    const auto d = ParticleSpec::dipole_from_length(Vec3{0, 2, 0}, 1e-3);
    CHECK(d.kind() == ParticleSpec::Kind::Dipole);
    CHECK_THAT(norm(d.electric_dipole()), WithinRel(1e-3, 1e-15));
    CHECK(d.dipole_length_scale() == 1e-3);
    CHECK(ParticleSpec::charged(-1.0).is_charge());
    CHECK_THROWS_AS(ParticleSpec::from_components(-1.0, {0, 1e-3, 0}, {}, 1e-3), SpecificationError);
    CHECK_THROWS_AS(ParticleSpec::dipole_from_length(kUnitY, 0.0), DomainError);
    CHECK(ParticleSpec::from_components(0.0, {0, 1e-3, 0}, {}, 1e-3).kind() == ParticleSpec::Kind::Dipole);
}

TEST_CASE("SI intensity to natural amplitude", "[units]") {
    // E0 = sqrt(2 I / (eps0 c)), I in W/m^2
    const double eps0 = 8.8541878128e-12;
    const double c = 299792458.0;
    const double e10 = std::sqrt(2.0 * 10.0e4 / (eps0 * c));
    const double e26 = std::sqrt(2.0 * 26.0e4 / (eps0 * c));
    CHECK_THAT(e10, WithinRel(8.68e3, 1e-3));
    CHECK_THAT(e26, WithinRel(1.40e4, 2e-3));
    CHECK_THAT(units::amplitude_from_intensity(10.0e4), WithinRel(e10, 1e-14));

    const auto f = si_to_natural(10.0, 100e-6);
    CHECK_THAT(f.amplitude(), WithinRel(e10 * units::kFieldPerVoltPerMeter, 1e-14));
    CHECK_THAT(f.wavelength(), WithinRel(100.0, 1e-14));

    CHECK_THROWS_AS(si_to_natural(0.0, 1e-4), DomainError);
    CHECK_THROWS_AS(si_to_natural(10.0, -1.0), DomainError);
}

TEST_CASE("natural-unit coupling reproduces e E L^2 / (hbar c)", "[units]") {
    // Dimensionless phase for E = 1 V/m across a 1 um x 1 um loop.
    const double hbar = 1.054571817e-34;
    const double c = 299792458.0;
    const double qe = 1.602176634e-19;
    const double expected = qe * 1.0 * 1e-12 / (hbar * c);
    CHECK_THAT(units::kElementaryCharge * units::field_from_volts_per_metre(1.0), WithinRel(expected, 1e-14));
    // Heaviside-Lorentz e^2 = 4 pi alpha
    CHECK_THAT(units::kElementaryCharge * units::kElementaryCharge / (4.0 * kPi), WithinRel(7.2973525693e-3, 1e-9));
}
