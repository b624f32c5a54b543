#include "dephase/decoherence.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dephase/bessel.hpp"
#include "dephase/errors.hpp"
#include "dephase/random.hpp"

namespace dephase {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(std::string("closed_form_c: ") + what + " must be positive");
}

}  // namespace

double overlap_factor(double c_modulus) {
    if (!(c_modulus >= 0.0)) throw DomainError("overlap_factor: |C| must be >= 0");
    return numerics::bessel_j0(c_modulus);
}

std::complex<double> time_average_oracle(const PhaseCoefficients& coeffs, double angular_frequency,
                                         const AverageMethod& method) {
    if (!(angular_frequency > 0.0)) throw DomainError("time_average_oracle: angular frequency must be positive");
    const double period = kTwoPi / angular_frequency;
    auto sample = [&](double t0) {
        const double phi = coeffs.phase_at(angular_frequency * t0);
        return std::complex<double>(std::cos(phi), std::sin(phi));
    };
    return std::visit(
        [&](const auto& m) -> std::complex<double> {
            using M = std::decay_t<decltype(m)>;
            double re = 0.0;
            double im = 0.0;
            std::int64_t n = 0;
            if constexpr (std::is_same_v<M, UniformGrid>) {
                if (m.points < 1) throw DomainError("time_average_oracle: need at least one grid point");
                n = m.points;
                for (std::int64_t j = 0; j < n; ++j) {
                    const auto z = sample(period * static_cast<double>(j) / static_cast<double>(n));
                    re += z.real();
                    im += z.imag();
                }
            } else {
                if (m.samples < 1) throw DomainError("time_average_oracle: need at least one sample");
                n = m.samples;
                numerics::SeededRng rng(m.seed);
                for (std::int64_t j = 0; j < n; ++j) {
                    const auto z = sample(period * rng.uniform());
                    re += z.real();
                    im += z.imag();
                }
            }
            return {re / static_cast<double>(n), im / static_cast<double>(n)};
        },
        method);
}

const char* to_string(ClosedForm which) {
    switch (which) {
        case ClosedForm::DipoleElliptic: return "dipole-elliptic";
        case ClosedForm::DipoleAsymmetric: return "dipole-asymmetric";
        case ClosedForm::ElectronElliptic: return "electron-elliptic";
        case ClosedForm::ElectronAsymmetric: return "electron-asymmetric";
    }
    return "?";
}

const char* to_string(ClosedFormBranch branch) {
    return branch == ClosedFormBranch::Exact ? "exact" : "asymptotic";
}

double ClosedFormInputs::resolved_omega_tau() const {
    if (omega_tau) return *omega_tau;
    require_positive(longitudinal_length, "s'");
    require_positive(speed, "v");
    require_positive(wavelength, "lambda");
    return kTwoPi * longitudinal_length / (speed * wavelength);
}

double closed_form_c(const ClosedFormInputs& in) {
    const double e = units::kElementaryCharge;
    require_positive(in.amplitude, "E0");
    switch (in.which) {
        case ClosedForm::DipoleElliptic: {
            require_positive(in.separation, "alpha");
            require_positive(in.dipole_length, "L");
            if (in.branch == ClosedFormBranch::Exact) {
                const double d_y = e * in.dipole_y.value_or(in.dipole_length);
                return std::abs(2.0 * kPi * in.separation * in.amplitude * d_y *
                                numerics::bessel_j1(in.resolved_omega_tau()));
            }
            require_positive(in.speed, "v");
            require_positive(in.wavelength, "lambda");
            require_positive(in.longitudinal_length, "s'");
            return std::sqrt(kPi) * in.separation * e * in.amplitude * in.dipole_length *
                   std::sqrt(in.speed * in.wavelength / in.longitudinal_length);
        }
        case ClosedForm::DipoleAsymmetric:
            require_positive(in.dipole_length, "L");
            require_positive(in.wavelength, "lambda");
            return e / kPi * in.amplitude * in.dipole_length * in.wavelength;
        case ClosedForm::ElectronElliptic: {
            require_positive(in.separation, "alpha");
            require_positive(in.wavelength, "lambda");
            if (in.branch == ClosedFormBranch::Exact)
                return std::abs(2.0 * kPi * in.separation * e * in.amplitude * in.wavelength *
                                numerics::bessel_j1(in.resolved_omega_tau()));
            require_positive(in.speed, "v");
            require_positive(in.longitudinal_length, "s'");
            return std::sqrt(kPi) * in.separation * e * in.amplitude * in.wavelength *
                   std::sqrt(in.speed * in.wavelength / in.longitudinal_length);
        }
        case ClosedForm::ElectronAsymmetric:
            require_positive(in.separation, "alpha");
            require_positive(in.speed, "v");
            require_positive(in.wavelength, "lambda");
            require_positive(in.longitudinal_length, "s'");
            return e / std::sqrt(2.0 * kPi) * in.amplitude * in.separation *
                   std::sqrt(in.speed * std::pow(in.wavelength, 3) / in.longitudinal_length);
    }
    return 0.0;
}

std::vector<std::string> closed_form_caveats(const ClosedFormInputs& in) {
    std::vector<std::string> out;
    const bool has_bessel = in.which == ClosedForm::DipoleElliptic || in.which == ClosedForm::ElectronElliptic;
    if (has_bessel && in.branch == ClosedFormBranch::Asymptotic) {
        const double wt = in.resolved_omega_tau();
        if (wt < 5.0) {
            std::ostringstream os;
            os << "asymptotic branch used with w tau = " << wt << " < 5";
            out.push_back(os.str());
        }
    }
    return out;
}

std::optional<double> geometry_closed_form(const ParticleSpec& particle, const FieldConfig& field,
                                           const PathPair& pair) {
    if (field.propagation_axis() != kUnitY || field.polarization_axis() != kUnitZ) return std::nullopt;
    const double e = units::kElementaryCharge;
    const double omega = field.angular_frequency();
    double strength = 0.0;  // e |d_y| or e |q| / w
    if (particle.is_charge()) {
        strength = e * std::abs(particle.charge()) / omega;
    } else {
        const Vec3& d = particle.electric_dipole();
        const Vec3& m = particle.magnetic_dipole();
        if (d.x != 0.0 || d.z != 0.0 || m != Vec3{}) return std::nullopt;
        strength = e * std::abs(d.y);
    }
    const double alpha = pair.separation();
    const double omega_tau = omega * pair.flight_time();
    const double e0 = field.amplitude();

    switch (pair.kind()) {
        case GeometryKind::Elliptic:
            return kPi * alpha * strength * e0 * std::abs(numerics::bessel_j1(0.5 * omega_tau));
        case GeometryKind::Asymmetric: {
            const auto& riser = std::get<LinearPiece>(pair.arm_2().pieces().front());
            const double f = (riser.t_end - riser.t_begin) / pair.flight_time();
            return 2.0 * alpha * strength * e0 *
                   std::abs(sinc(0.5 * omega_tau * f) * std::sin(0.5 * omega_tau * (1.0 - f)));
        }
        case GeometryKind::Piecewise:
            return std::nullopt;
    }
    return std::nullopt;
}

std::vector<FringeSample> fringe_pattern(std::complex<double> overlap, int n_points, double phase_span) {
    return fringe_pattern(overlap, n_points, phase_span, 1.0, 1.0);
}

std::vector<FringeSample> fringe_pattern(std::complex<double> overlap, int n_points, double phase_span,
                                         double amplitude_1, double amplitude_2) {
    const double mod = std::abs(overlap);
    if (!(mod <= 1.0 + 1e-12)) throw DomainError("fringe_pattern: |F| must not exceed 1");
    if (n_points < 8) throw DomainError("fringe_pattern: need at least 8 points");
    if (!(phase_span > 0.0) || !std::isfinite(phase_span)) throw DomainError("fringe_pattern: span must be positive");
    if (!(amplitude_1 >= 0.0) || !(amplitude_2 >= 0.0) || amplitude_1 + amplitude_2 == 0.0)
        throw DomainError("fringe_pattern: amplitudes must be nonnegative and not both zero");

    const double p1 = amplitude_1 * amplitude_1;
    const double p2 = amplitude_2 * amplitude_2;
    const double contrast = 2.0 * amplitude_1 * amplitude_2 * std::min(mod, 1.0) / (p1 + p2);
    const double shift = mod > 0.0 ? std::arg(overlap) : 0.0;

    std::vector<FringeSample> out;
    out.reserve(static_cast<std::size_t>(n_points));
    for (int j = 0; j < n_points; ++j) {
        const double theta = phase_span * j / n_points;
        out.push_back({theta, 1.0 + contrast * std::cos(theta + shift)});
    }
    return out;
}

double visibility(const std::vector<FringeSample>& pattern) {
    if (pattern.size() < 8) throw InsufficientSpanError("visibility: need at least 8 samples");
    const double first = pattern.front().detector_phase;
    const double last = pattern.back().detector_phase;
    const double step = (last - first) / static_cast<double>(pattern.size() - 1);
    if (!(last - first + step >= kTwoPi * (1.0 - 1e-12)))
        throw InsufficientSpanError("visibility: pattern spans less than one fringe period");
    const auto [lo, hi] = std::minmax_element(pattern.begin(), pattern.end(),
                                              [](const auto& a, const auto& b) { return a.intensity < b.intensity; });
    const double sum = hi->intensity + lo->intensity;
    return sum > 0.0 ? (hi->intensity - lo->intensity) / sum : 0.0;
}

double fringe_maximum(const std::vector<FringeSample>& pattern) {
    if (pattern.size() < 3) throw DomainError("fringe_maximum: need at least 3 samples");
    // Normal equations for I = c0 + c1 cos + c2 sin.
    std::array<std::array<double, 4>, 3> m{};
    for (const auto& s : pattern) {
        const std::array<double, 3> basis{1.0, std::cos(s.detector_phase), std::sin(s.detector_phase)};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) m[r][c] += basis[r] * basis[c];
            m[r][3] += basis[r] * s.intensity;
        }
    }
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        std::swap(m[col], m[pivot]);
        if (m[col][col] == 0.0) throw DomainError("fringe_maximum: degenerate sampling");
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const double f = m[r][col] / m[col][col];
            for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
        }
    }
    const double c1 = m[1][3] / m[1][1];
    const double c2 = m[2][3] / m[2][2];
    return std::atan2(c2, c1);
}

}  // namespace dephase
