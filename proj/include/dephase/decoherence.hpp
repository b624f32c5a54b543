#pragma once

// From phase coefficients to observables: the overlap factor F = <exp(i phi)>
// averaged over the emission time, its closed form J0(|C|), the printed
// closed-form |C| expressions for the four particle/geometry combinations,
// and two-path fringe patterns.

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dephase/phase_engine.hpp"

namespace dephase {

struct DecoherenceResult {
    double overlap_factor = 1.0;          // analytic branch, J0(|C|)
    std::complex<double> oracle_overlap;  // time-average branch
    double visibility = 1.0;
    double fringe_shift = 0.0;            // arg F, radians

    friend bool operator==(const DecoherenceResult&, const DecoherenceResult&) = default;
};

// J0(C_modulus); throws DomainError for negative input.
double overlap_factor(double c_modulus);

struct UniformGrid {
    std::int64_t points = 10'000;
};

struct MonteCarlo {
    std::int64_t samples = 1'000'000;
    std::uint64_t seed = 0;
};

using AverageMethod = std::variant<UniformGrid, MonteCarlo>;

// Average of exp(i phi(t0)) with t0 uniform over one field period.
std::complex<double> time_average_oracle(const PhaseCoefficients& coeffs, double angular_frequency,
                                         const AverageMethod& method);

enum class ClosedForm { DipoleElliptic, DipoleAsymmetric, ElectronElliptic, ElectronAsymmetric };
enum class ClosedFormBranch { Exact, Asymptotic };

const char* to_string(ClosedForm which);
const char* to_string(ClosedFormBranch branch);

// Inputs in natural units. d_y is in units of e * length (defaults to L);
// omega_tau defaults to 2 pi s' / (v lambda).
struct ClosedFormInputs {
    ClosedForm which = ClosedForm::DipoleElliptic;
    ClosedFormBranch branch = ClosedFormBranch::Exact;
    double separation = 0.0;           // alpha
    double longitudinal_length = 0.0;  // s'
    double speed = 0.0;                // v
    double wavelength = 0.0;           // lambda
    double amplitude = 0.0;            // E0
    double dipole_length = 0.0;        // L
    std::optional<double> dipole_y;
    std::optional<double> omega_tau;

    double resolved_omega_tau() const;
};

// Printed closed forms, constants included:
//   dipole-elliptic     2 pi alpha E0 d_y J1(w tau)   |  sqrt(pi) alpha e E0 L (v lambda / s')^1/2
//   dipole-asymmetric   (e / pi) E0 L lambda
//   electron-elliptic   2 pi alpha e E0 lambda J1(w tau)  |  sqrt(pi) alpha e E0 lambda (v lambda / s')^1/2
//   electron-asymmetric (e / sqrt(2 pi)) E0 alpha (v lambda^3 / s')^1/2
// Returns the modulus. Forms without a Bessel factor ignore `branch`.
double closed_form_c(const ClosedFormInputs& inputs);

// Caveats for an evaluation (asymptotic branch with w tau < 5).
std::vector<std::string> closed_form_caveats(const ClosedFormInputs& inputs);

// |C| of this library's own built-in geometries, derived analytically for a
// d_y dipole or a charge in the default plane wave (propagation y, E along z):
//   elliptic dipole     pi alpha e |d_y| E0 |J1(w tau / 2)|
//   elliptic charge     pi alpha e |q| E0 |J1(w tau / 2)| / w
//   staircase dipole    2 alpha e |d_y| E0 |sinc(w f tau / 2) sin(w (1 - f) tau / 2)|
//   staircase charge    the staircase dipole value with e |q| / w in place of e |d_y|
// where f is the riser fraction read off the staircase arm. Returns nullopt
// for other configurations.
std::optional<double> geometry_closed_form(const ParticleSpec& particle, const FieldConfig& field,
                                           const PathPair& pair);

struct FringeSample {
    double detector_phase = 0.0;
    double intensity = 0.0;

    friend bool operator==(const FringeSample&, const FringeSample&) = default;
};

// Equal-amplitude two-path pattern 1 + |F| cos(theta + arg F) on n_points
// equispaced detector phases in [0, phase_span); mean intensity is 1 over
// whole fringe periods.
std::vector<FringeSample> fringe_pattern(std::complex<double> overlap, int n_points, double phase_span);

// Unequal amplitudes |psi1|, |psi2|, normalized to mean 1; contrast is
// 2 |psi1| |psi2| |F| / (|psi1|^2 + |psi2|^2).
std::vector<FringeSample> fringe_pattern(std::complex<double> overlap, int n_points, double phase_span,
                                         double amplitude_1, double amplitude_2);

// Michelson contrast (I_max - I_min) / (I_max + I_min). Throws
// InsufficientSpanError if fewer than 8 samples or less than one period.
double visibility(const std::vector<FringeSample>& pattern);

// Detector phase of the fringe maximum from a least-squares fit of
// c0 + c1 cos(theta) + c2 sin(theta), wrapped to (-pi, pi].
double fringe_maximum(const std::vector<FringeSample>& pattern);

}  // namespace dephase
