#include "dephase/physics.hpp"

#include <cmath>
#include <string>

#include "dephase/errors.hpp"

namespace dephase {

namespace units {

double amplitude_from_intensity(double watts_per_square_metre) {
    if (!(watts_per_square_metre > 0.0) || !std::isfinite(watts_per_square_metre))
        throw DomainError("amplitude_from_intensity: intensity must be positive");
    return std::sqrt(2.0 * watts_per_square_metre / (kVacuumPermittivity * kSpeedOfLight));
}

}  // namespace units

namespace {

bool is_zero(const Vec3& v) { return v.x == 0.0 && v.y == 0.0 && v.z == 0.0; }

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + " is not finite");
}

Vec3 unit_axis(const Vec3& v, const char* what) {
    if (!is_finite(v)) throw DomainError(std::string(what) + " is not finite");
    const double n = norm(v);
    if (!(n > 0.0)) throw DomainError(std::string(what) + " must be nonzero");
    return v * (1.0 / n);
}

}  // namespace

ParticleSpec ParticleSpec::charged(double charge) {
    require_finite(charge, "charge");
    ParticleSpec p;
    p.kind_ = Kind::Charge;
    p.charge_ = charge;
    return p;
}

ParticleSpec ParticleSpec::dipole(const Vec3& electric, const Vec3& magnetic, double length_scale) {
    if (!is_finite(electric) || !is_finite(magnetic)) throw DomainError("dipole moments must be finite");
    if (!(length_scale > 0.0) || !std::isfinite(length_scale))
        throw DomainError("dipole length scale must be positive");
    ParticleSpec p;
    p.kind_ = Kind::Dipole;
    p.electric_ = electric;
    p.magnetic_ = magnetic;
    p.length_scale_ = length_scale;
    return p;
}

ParticleSpec ParticleSpec::dipole_from_length(const Vec3& direction, double length_scale) {
    return dipole(unit_axis(direction, "dipole direction") * length_scale, Vec3{}, length_scale);
}

ParticleSpec ParticleSpec::from_components(double charge, const Vec3& electric, const Vec3& magnetic,
                                           double length_scale) {
    const bool has_dipole = !is_zero(electric) || !is_zero(magnetic);
    if (charge != 0.0 && has_dipole)
        throw SpecificationError("particle carries both a charge and a dipole moment; the two couplings are "
                                 "treated separately");
    if (charge != 0.0) {
        ParticleSpec p = charged(charge);
        if (!(length_scale > 0.0) || !std::isfinite(length_scale))
            throw DomainError("dipole length scale must be positive");
        p.length_scale_ = length_scale;
        return p;
    }
    return dipole(electric, magnetic, length_scale);
}

ParticleSpec ParticleSpec::scaled(double s) const {
    ParticleSpec p = *this;
    p.charge_ *= s;
    p.electric_ *= s;
    p.magnetic_ *= s;
    return p;
}

FieldConfig FieldConfig::plane_wave(double amplitude, double angular_frequency, const Vec3& propagation,
                                    const Vec3& polarization) {
    if (!(amplitude >= 0.0) || !std::isfinite(amplitude))
        throw DomainError("FieldConfig: amplitude must be finite and >= 0");
    if (!(angular_frequency > 0.0) || !std::isfinite(angular_frequency))
        throw DomainError("FieldConfig: angular frequency must be positive");
    FieldConfig f;
    f.amplitude_ = amplitude;
    f.omega_ = angular_frequency;
    f.propagation_ = unit_axis(propagation, "propagation axis");
    f.polarization_ = unit_axis(polarization, "polarization axis");
    if (std::abs(dot(f.propagation_, f.polarization_)) >= 1e-12)
        throw DomainError("FieldConfig: polarization must be orthogonal to propagation");
    return f;
}

FieldConfig FieldConfig::from_wavelength(double amplitude, double wavelength, const Vec3& propagation,
                                         const Vec3& polarization) {
    if (!(wavelength > 0.0) || !std::isfinite(wavelength))
        throw DomainError("FieldConfig: wavelength must be positive");
    return plane_wave(amplitude, 2.0 * std::numbers::pi / wavelength, propagation, polarization);
}

FieldConfig FieldConfig::with_amplitude(double amplitude) const {
    return plane_wave(amplitude, omega_, propagation_, polarization_);
}

FieldSample eval_field(const FieldConfig& field, const Vec3& position, double t, double emission_offset) {
    const double phase =
        field.angular_frequency() * (t + emission_offset) - field.wave_number() * dot(field.propagation_axis(), position);
    const double s = field.amplitude() * std::sin(phase);
    return {field.polarization_axis() * s, field.magnetic_axis() * s};
}

FourVector gauge_potential(const FieldConfig& field, const Vec3& position, double t, double emission_offset) {
    const double phase =
        field.angular_frequency() * (t + emission_offset) - field.wave_number() * dot(field.propagation_axis(), position);
    const double a = field.amplitude() / field.angular_frequency() * std::cos(phase);
    return {0.0, field.polarization_axis() * a};
}

FourVector ac_connection(const ParticleSpec& particle, const FieldSample& sample) {
    if (particle.is_charge())
        throw SpecificationError("ac_connection: requires a neutral dipole, got a charged particle");
    const Vec3& d = particle.electric_dipole();
    const Vec3& m = particle.magnetic_dipole();
    return {-dot(m, sample.B) - dot(d, sample.E), cross(d, sample.B) - cross(m, sample.E)};
}

FieldConfig si_to_natural(double flux_watts_per_square_cm, double wavelength_metres) {
    if (!(flux_watts_per_square_cm > 0.0) || !std::isfinite(flux_watts_per_square_cm))
        throw DomainError("si_to_natural: flux must be positive");
    if (!(wavelength_metres > 0.0) || !std::isfinite(wavelength_metres))
        throw DomainError("si_to_natural: wavelength must be positive");
    const double e_si = units::amplitude_from_intensity(flux_watts_per_square_cm * 1e4);
    return FieldConfig::from_wavelength(units::field_from_volts_per_metre(e_si),
                                        units::length_from_metres(wavelength_metres));
}

}  // namespace dephase
