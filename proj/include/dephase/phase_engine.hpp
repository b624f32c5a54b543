#pragma once

// Time-dependent Aharonov phase around the closed loop C1 - C2 and its
// decomposition phi(t0) = A cos(w t0) + B sin(w t0).
//
// Sign convention: connections are contracted directly with (dt, dr),
//   phi = -q * (I(C1) - I(C2)),   I(C) = int_C g.time dt + g.space . dr,
// with g = A (gauge potential, q = charge * e) for charges and g = a (the
// Aharonov-Casher connection, q = e) for dipoles. Only |C| and the fringe
// shift depend on this choice of overall sign.

#include <functional>

#include "dephase/physics.hpp"
#include "dephase/quadrature.hpp"
#include "dephase/trajectories.hpp"

namespace dephase {

struct PhaseCoefficients {
    double a = 0.0;
    double b = 0.0;
    double c_modulus = 0.0;
    double c_phase = 0.0;

    static PhaseCoefficients from_components(double a, double b);

    // A cos(xi) + B sin(xi) with xi = w t0.
    double phase_at(double xi) const;
    // Coefficients of phi(t0 + delta): rotation of (A, B) by w delta.
    PhaseCoefficients shifted(double omega_delta) const;

    friend bool operator==(const PhaseCoefficients&, const PhaseCoefficients&) = default;
};

// Scalar gauge function chi(t, r) with its analytic gradient (d chi/dt, grad chi).
struct GaugeFunction {
    std::function<double(double, const Vec3&)> value;
    std::function<FourVector(double, const Vec3&)> gradient;
    // Temporal angular frequency of chi, used only to size quadrature panels.
    double angular_frequency = 0.0;
};

enum class LoopTerm { Total, Temporal, Spatial };

struct PhaseEvaluation {
    double phase = 0.0;
    // Sum of per-piece error bounds, scaled by the coupling.
    double error_bound = 0.0;
};

// Loop phase restricted to the temporal (g.time dt) or spatial (g.space . dr)
// part of the integrand, or the full phase. With `gauge`, the charge's
// potential is shifted by the exact differential of chi.
PhaseEvaluation evaluate_loop_phase(const ParticleSpec& particle, const FieldConfig& field, const PathPair& pair,
                                    double emission_offset, const numerics::QuadratureSpec& quad,
                                    LoopTerm term = LoopTerm::Total, const GaugeFunction* gauge = nullptr);

double phase_at_emission(const ParticleSpec& particle, const FieldConfig& field, const PathPair& pair,
                         double emission_offset, const numerics::QuadratureSpec& quad);

// A = phi(w t0 = 0), B = phi(w t0 = pi/2); throws FormViolationError when the
// phase at w t0 in {pi/4, pi, 3 pi/2} disagrees with the reconstruction by
// more than ten times the quadrature error bound.
PhaseCoefficients extract_coefficients(const ParticleSpec& particle, const FieldConfig& field, const PathPair& pair,
                                       const numerics::QuadratureSpec& quad);

// The same extraction for an arbitrary phase function of xi = w t0.
PhaseCoefficients coefficients_from_phase_function(const std::function<PhaseEvaluation(double)>& phase_of_xi);

// Largest |phi_chi - phi| over 8 emission times spread over one field period.
double check_gauge_invariance(const ParticleSpec& particle, const FieldConfig& field, const PathPair& pair,
                              const GaugeFunction& gauge, const numerics::QuadratureSpec& quad);

}  // namespace dephase
