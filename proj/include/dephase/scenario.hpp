#pragma once

// Scenario documents: every physical quantity carries an explicit unit and is
// resolved to natural units (1 length unit = 1 um, c = hbar = 1) before any
// computation. Scenarios round-trip through JSON.

#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "dephase/decoherence.hpp"
#include "dephase/phase_engine.hpp"

namespace dephase {

enum class Dimension { Length, Time, Speed, Field, Flux, DipoleMoment, Charge };

struct Quantity {
    double value = 0.0;
    std::string unit;

    friend bool operator==(const Quantity&, const Quantity&) = default;
};

struct VectorQuantity {
    Vec3 value;
    std::string unit;

    friend bool operator==(const VectorQuantity&, const VectorQuantity&) = default;
};

// Recognized units per dimension:
//   length  m cm mm um nm natural
//   time    s ns natural
//   speed   c m/s
//   field   V/m natural
//   flux    W/cm^2 W/m^2
//   dipole  e*m e*nm e*um e*natural   (moment over the elementary charge)
//   charge  e
// Throws ConfigError for a unit outside the dimension's table.
double to_natural(const Quantity& q, Dimension dim);
Vec3 to_natural(const VectorQuantity& q, Dimension dim);
std::vector<std::string> units_for(Dimension dim);

struct ParticleConfig {
    ParticleSpec::Kind kind = ParticleSpec::Kind::Charge;
    Quantity charge{-1.0, "e"};
    VectorQuantity electric_dipole{{}, "e*nm"};
    VectorQuantity magnetic_dipole{{}, "e*nm"};
    Quantity dipole_length{1.0, "nm"};

    ParticleSpec resolve() const;

    friend bool operator==(const ParticleConfig&, const ParticleConfig&) = default;
};

// Exactly one of flux / amplitude is set.
struct FieldSettings {
    std::optional<Quantity> flux;
    std::optional<Quantity> amplitude;
    Quantity wavelength{100.0, "um"};
    Vec3 propagation = kUnitY;
    Vec3 polarization = kUnitZ;

    FieldConfig resolve() const;

    friend bool operator==(const FieldSettings&, const FieldSettings&) = default;
};

struct WaypointConfig {
    Quantity time;
    VectorQuantity position;

    friend bool operator==(const WaypointConfig&, const WaypointConfig&) = default;
};

struct GeometryConfig {
    GeometryKind kind = GeometryKind::Elliptic;
    Quantity separation{100.0, "um"};
    Quantity longitudinal_length{100.0, "um"};
    Quantity speed{0.1, "c"};
    double riser_fraction = kDefaultRiserFraction;  // asymmetric only
    std::vector<WaypointConfig> arm_1;                // piecewise only
    std::vector<WaypointConfig> arm_2;

    friend bool operator==(const GeometryConfig&, const GeometryConfig&) = default;
};

struct OracleSettings {
    std::int64_t grid_points = 10'000;
    std::int64_t monte_carlo_samples = 1'000'000;
    double tolerance = 1e-6;  // allowed |grid average - J0(|C|)|

    friend bool operator==(const OracleSettings&, const OracleSettings&) = default;
};

struct FringeSettings {
    int points = 256;
    double phase_span = 2.0 * std::numbers::pi;
    double amplitude_1 = 1.0;
    double amplitude_2 = 1.0;

    friend bool operator==(const FringeSettings&, const FringeSettings&) = default;
};

struct Scenario {
    std::string name;
    std::string description;
    ParticleConfig particle;
    FieldSettings field;
    GeometryConfig geometry;
    numerics::QuadratureSpec quadrature;
    // Any of "coefficients", "overlap", "fringe", "sweep".
    std::vector<std::string> outputs{"coefficients", "overlap"};
    std::uint64_t seed = 0;
    OracleSettings oracle;
    FringeSettings fringe;

    // Throws ConfigError for inconsistent settings (both or neither field
    // strength given, unknown output names, bad counts).
    void validate() const;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Scenario resolved to natural units, with the path pair built.
struct ResolvedScenario {
    ParticleSpec particle;
    FieldConfig field;
    PathPair pair;
    double riser_fraction;
};

ResolvedScenario resolve(const Scenario& s);

// Geometry rebuilt with new natural-unit separation / speed; piecewise
// scenarios throw DomainError.
PathPair rebuild_pair(const Scenario& s, double separation, double speed);

std::string scenario_to_json(const Scenario& s, int indent = 2);
Scenario scenario_from_json(const std::string& text);
Scenario load_scenario_file(const std::string& path);

std::vector<std::string> preset_names();
// Throws ConfigError listing the valid names.
Scenario preset(const std::string& name);

// Preset name or JSON file path.
Scenario load_scenario(const std::string& name_or_path);

struct ClosedFormComparison {
    ClosedForm form = ClosedForm::DipoleElliptic;
    ClosedFormBranch branch = ClosedFormBranch::Exact;
    double value = 0.0;
    double ratio = 0.0;  // computed C_modulus / value (0 when value is 0)

    friend bool operator==(const ClosedFormComparison&, const ClosedFormComparison&) = default;
};

struct OracleCheck {
    std::complex<double> grid_overlap;
    double grid_delta = 0.0;  // |grid - J0(|C|)|
    std::complex<double> monte_carlo_overlap;
    double monte_carlo_delta = 0.0;
    double monte_carlo_bound = 0.0;  // 3 / sqrt(N)
    bool agrees = true;

    friend bool operator==(const OracleCheck&, const OracleCheck&) = default;
};

struct ScenarioReport {
    std::string scenario;
    double angular_frequency = 0.0;
    double amplitude = 0.0;
    double flight_time = 0.0;
    double omega_tau = 0.0;
    double separation = 0.0;
    double longitudinal_length = 0.0;
    double speed = 0.0;
    PhaseCoefficients coefficients;
    DecoherenceResult decoherence;
    OracleCheck oracle;
    std::vector<FringeSample> fringe;
    std::optional<double> geometry_closed_form;
    std::vector<ClosedFormComparison> closed_forms;
    std::vector<std::string> warnings;

    friend bool operator==(const ScenarioReport&, const ScenarioReport&) = default;
};

// Build pair, extract coefficients, overlap factor, oracle cross-check,
// fringe pattern. Errors are rethrown with the scenario name prefixed,
// keeping their type.
ScenarioReport run_scenario(const Scenario& s);

}  // namespace dephase
