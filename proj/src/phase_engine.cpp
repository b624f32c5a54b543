#include "dephase/phase_engine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <variant>

#include "dephase/errors.hpp"

namespace dephase {

namespace {

constexpr double kPi = std::numbers::pi;

double coupling(const ParticleSpec& particle) {
    return particle.is_charge() ? particle.charge() * units::kElementaryCharge : units::kElementaryCharge;
}

struct ArmIntegral {
    double value = 0.0;
    double error_bound = 0.0;
};

ArmIntegral integrate_arm(const Arm& arm, const ParticleSpec& particle, const FieldConfig& field,
                          double emission_offset, const numerics::QuadratureSpec& quad, LoopTerm term,
                          const GaugeFunction* gauge) {
    auto connection = [&](double t, const Vec3& r) -> FourVector {
        FourVector g = particle.is_charge() ? gauge_potential(field, r, t, emission_offset)
                                            : ac_connection(particle, eval_field(field, r, t, emission_offset));
        if (gauge != nullptr) {
            const FourVector d = gauge->gradient(t, r);
            g.time += d.time;
            g.space += d.space;
        }
        return g;
    };

    const double omega = std::max(field.angular_frequency(), gauge ? gauge->angular_frequency : 0.0);
    ArmIntegral out;
    for (const auto& piece : arm.pieces()) {
        std::visit(
            [&](const auto& q) {
                auto integrand = [&](double s) {
                    const double t = q.time_at(s);
                    const FourVector g = connection(t, q.position_at(s));
                    double v = 0.0;
                    if (term != LoopTerm::Spatial) v += g.time * q.time_rate(s);
                    if (term != LoopTerm::Temporal) v += dot(g.space, q.position_rate(s));
                    return v;
                };
                const double char_omega = omega * q.time_rate_bound() +
                                          field.wave_number() * q.position_rate_bound(field.propagation_axis());
                const auto r = numerics::integrate_oscillatory_detailed(integrand, q.parameter_begin(),
                                                                        q.parameter_end(), char_omega, quad);
                out.value += r.value;
                out.error_bound +=
                    std::max({r.error_estimate, quad.relative_tolerance * std::abs(r.value),
                              numerics::detail::kRoundoffUlps * std::numeric_limits<double>::epsilon() * r.magnitude});
            },
            piece);
    }
    return out;
}

}  // namespace

PhaseCoefficients PhaseCoefficients::from_components(double a, double b) {
    return {a, b, std::hypot(a, b), std::atan2(b, a)};
}

double PhaseCoefficients::phase_at(double xi) const { return a * std::cos(xi) + b * std::sin(xi); }

PhaseCoefficients PhaseCoefficients::shifted(double omega_delta) const {
    // phi(xi + d) = (A cos d + B sin d) cos xi + (B cos d - A sin d) sin xi
    const double c = std::cos(omega_delta);
    const double s = std::sin(omega_delta);
    return from_components(a * c + b * s, b * c - a * s);
}

PhaseEvaluation evaluate_loop_phase(const ParticleSpec& particle, const FieldConfig& field, const PathPair& pair,
                                    double emission_offset, const numerics::QuadratureSpec& quad, LoopTerm term,
                                    const GaugeFunction* gauge) {
    if (!std::isfinite(emission_offset)) throw DomainError("emission offset must be finite");
    if (gauge != nullptr && !particle.is_charge())
        throw SpecificationError("gauge transformations apply to the charged-particle potential only");
    const ArmIntegral i1 = integrate_arm(pair.arm_1(), particle, field, emission_offset, quad, term, gauge);
    const ArmIntegral i2 = integrate_arm(pair.arm_2(), particle, field, emission_offset, quad, term, gauge);
    const double q = coupling(particle);
    return {-q * (i1.value - i2.value), std::abs(q) * (i1.error_bound + i2.error_bound)};
}

double phase_at_emission(const ParticleSpec& particle, const FieldConfig& field, const PathPair& pair,
                         double emission_offset, const numerics::QuadratureSpec& quad) {
    return evaluate_loop_phase(particle, field, pair, emission_offset, quad).phase;
}

PhaseCoefficients coefficients_from_phase_function(const std::function<PhaseEvaluation(double)>& phase_of_xi) {
    const PhaseEvaluation at_zero = phase_of_xi(0.0);
    const PhaseEvaluation at_quarter = phase_of_xi(0.5 * kPi);
    const auto coeffs = PhaseCoefficients::from_components(at_zero.phase, at_quarter.phase);

    for (const double xi : std::array{0.25 * kPi, kPi, 1.5 * kPi}) {
        const PhaseEvaluation direct = phase_of_xi(xi);
        const double mismatch = std::abs(direct.phase - coeffs.phase_at(xi));
        const double tolerance = 10.0 * (at_zero.error_bound + at_quarter.error_bound + direct.error_bound);
        if (mismatch > tolerance) {
            std::ostringstream os;
            os << "loop phase is not of the form A cos(w t0) + B sin(w t0): at w t0 = " << xi << " direct "
               << direct.phase << " vs reconstructed " << coeffs.phase_at(xi) << " (tolerance " << tolerance << ")";
            throw FormViolationError(os.str());
        }
    }
    return coeffs;
}

PhaseCoefficients extract_coefficients(const ParticleSpec& particle, const FieldConfig& field, const PathPair& pair,
                                       const numerics::QuadratureSpec& quad) {
    const double omega = field.angular_frequency();
    return coefficients_from_phase_function(
        [&](double xi) { return evaluate_loop_phase(particle, field, pair, xi / omega, quad); });
}

double check_gauge_invariance(const ParticleSpec& particle, const FieldConfig& field, const PathPair& pair,
                              const GaugeFunction& gauge, const numerics::QuadratureSpec& quad) {
    if (!particle.is_charge()) throw SpecificationError("check_gauge_invariance: requires a charged particle");
    const double period = 2.0 * kPi / field.angular_frequency();
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double t0 = period * i / 8.0;
        const double original = evaluate_loop_phase(particle, field, pair, t0, quad).phase;
        const double transformed = evaluate_loop_phase(particle, field, pair, t0, quad, LoopTerm::Total, &gauge).phase;
        worst = std::max(worst, std::abs(transformed - original));
    }
    return worst;
}

}  // namespace dephase
