#pragma once

// Natural units (c = hbar = 1, Heaviside-Lorentz), particle and plane-wave
// field descriptions, the gauge potential used for charges and the
// Aharonov-Casher connection used for neutral dipoles.

#include <cmath>
#include <numbers>

#include "dephase/vec3.hpp"

namespace dephase {

// One natural length unit is one micrometre; one natural time unit is the
// light travel time across it. Field amplitudes are stored in units where
// e * E * length^2 is the dimensionless coupling phase.
namespace units {

inline constexpr double kSpeedOfLight = 299'792'458.0;             // m/s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;    // F/m
inline constexpr double kReducedPlanck = 1.054571817e-34;          // J s
inline constexpr double kElementaryChargeSI = 1.602176634e-19;     // C

inline constexpr double kLengthPerNatural = 1e-6;                                   // m
inline constexpr double kTimePerNatural = kLengthPerNatural / kSpeedOfLight;         // s

// e in Heaviside-Lorentz natural units, sqrt(4 pi alpha).
inline const double kElementaryCharge =
    kElementaryChargeSI / std::sqrt(kVacuumPermittivity * kReducedPlanck * kSpeedOfLight);

// Natural field amplitude per V/m.
inline const double kFieldPerVoltPerMeter =
    kElementaryChargeSI * kLengthPerNatural * kLengthPerNatural / (kReducedPlanck * kSpeedOfLight) /
    kElementaryCharge;

inline double length_from_metres(double m) { return m / kLengthPerNatural; }
inline double time_from_seconds(double s) { return s / kTimePerNatural; }
inline double field_from_volts_per_metre(double v) { return v * kFieldPerVoltPerMeter; }
inline double speed_from_metres_per_second(double v) { return v / kSpeedOfLight; }

// Amplitude of a plane wave with time-averaged intensity I: I = eps0 c E^2 / 2.
double amplitude_from_intensity(double watts_per_square_metre);

}  // namespace units

// Either a pure charge (Aharonov-Bohm coupling) or a pure dipole
// (Aharonov-Casher coupling). Charges are in units of e; dipole moments in
// units of e times natural length, so d = e L has |d| = L.
class ParticleSpec {
public:
    enum class Kind { Charge, Dipole };

    static constexpr double kDefaultDipoleLength = 1e-3;  // 1 nm

    static ParticleSpec charged(double charge);
    static ParticleSpec dipole(const Vec3& electric, const Vec3& magnetic, double length_scale);
    // d = e L along `direction` (normalized), no magnetic moment.
    static ParticleSpec dipole_from_length(const Vec3& direction, double length_scale);
    // Validating constructor for arbitrary input (config files). Rejects mixed
    // charge + dipole specs with SpecificationError.
    static ParticleSpec from_components(double charge, const Vec3& electric, const Vec3& magnetic,
                                        double length_scale);

    Kind kind() const noexcept { return kind_; }
    bool is_charge() const noexcept { return kind_ == Kind::Charge; }
    double charge() const noexcept { return charge_; }
    const Vec3& electric_dipole() const noexcept { return electric_; }
    const Vec3& magnetic_dipole() const noexcept { return magnetic_; }
    double dipole_length_scale() const noexcept { return length_scale_; }

    // Same particle with every source strength multiplied by s.
    ParticleSpec scaled(double s) const;

    friend bool operator==(const ParticleSpec&, const ParticleSpec&) = default;

private:
    ParticleSpec() = default;

    Kind kind_ = Kind::Charge;
    double charge_ = 0.0;
    Vec3 electric_;
    Vec3 magnetic_;
    double length_scale_ = kDefaultDipoleLength;
};

// Linearly polarized monochromatic plane wave,
//   E = E0 sin(w t - k n.r) e_pol,  B = E0 sin(w t - k n.r) (n x e_pol),
// with k = w in natural units.
class FieldConfig {
public:
    static FieldConfig plane_wave(double amplitude, double angular_frequency, const Vec3& propagation = kUnitY,
                                  const Vec3& polarization = kUnitZ);
    static FieldConfig from_wavelength(double amplitude, double wavelength, const Vec3& propagation = kUnitY,
                                       const Vec3& polarization = kUnitZ);

    double amplitude() const noexcept { return amplitude_; }
    double angular_frequency() const noexcept { return omega_; }
    double wave_number() const noexcept { return omega_; }
    double wavelength() const noexcept { return 2.0 * std::numbers::pi / omega_; }
    const Vec3& propagation_axis() const noexcept { return propagation_; }
    const Vec3& polarization_axis() const noexcept { return polarization_; }
    Vec3 magnetic_axis() const { return cross(propagation_, polarization_); }

    FieldConfig with_amplitude(double amplitude) const;

    friend bool operator==(const FieldConfig&, const FieldConfig&) = default;

private:
    FieldConfig() = default;

    double amplitude_ = 0.0;
    double omega_ = 1.0;
    Vec3 propagation_ = kUnitY;
    Vec3 polarization_ = kUnitZ;
};

struct FieldSample {
    Vec3 E;
    Vec3 B;
};

// Field at `position` and lab time t for a packet emitted with offset t0;
// the offset enters only through the phase w (t + t0).
FieldSample eval_field(const FieldConfig& field, const Vec3& position, double t, double emission_offset);

// Temporal-gauge potential: A^0 = 0, A = (E0 / w) cos(w (t + t0) - k n.r) e_pol,
// so that E = -dA/dt and B = curl A.
FourVector gauge_potential(const FieldConfig& field, const Vec3& position, double t, double emission_offset);

// a = (-m.B - d.E, d x B - m x E). Throws SpecificationError for charges.
FourVector ac_connection(const ParticleSpec& particle, const FieldSample& sample);

// Plane wave from an SI intensity (W/cm^2) and wavelength (m), expressed in
// natural units. Default axes as in plane_wave.
FieldConfig si_to_natural(double flux_watts_per_square_cm, double wavelength_metres);

}  // namespace dephase
