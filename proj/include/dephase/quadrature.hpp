#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "dephase/errors.hpp"

namespace dephase::numerics {

struct QuadratureSpec {
    int panels_per_period = 8;
    int nodes_per_panel = 8;
    double relative_tolerance = 1e-10;
    int max_refinements = 12;

    // Throws DomainError when an invariant is broken:
    // panels_per_period >= 8, nodes_per_panel >= 4,
    // relative_tolerance in (0, 1e-3], max_refinements >= 1.
    void validate() const;

    friend bool operator==(const QuadratureSpec&, const QuadratureSpec&) = default;
};

// Gauss-Legendre nodes and weights on [-1, 1].
class GaussLegendreRule {
public:
    explicit GaussLegendreRule(int n);

    int size() const noexcept { return static_cast<int>(nodes_.size()); }
    const std::vector<double>& nodes() const noexcept { return nodes_; }
    const std::vector<double>& weights() const noexcept { return weights_; }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

struct QuadratureResult {
    double value = 0.0;
    // |difference| of the last two refinement levels.
    double error_estimate = 0.0;
    // Integral of |f| from the last level; sets the round-off floor.
    double magnitude = 0.0;
    std::int64_t panels = 0;
    int refinements = 0;
};

namespace detail {

// Neumaier-compensated accumulator.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

std::int64_t initial_panel_count(double t_start, double t_end, double omega, const QuadratureSpec& spec);

// Differences below this many ulps of the integral of |f| are round-off.
inline constexpr double kRoundoffUlps = 256.0;

}  // namespace detail

// Composite Gauss-Legendre quadrature sized to the oscillation period 2*pi/omega,
// with panel doubling until two successive estimates agree. Returns the finer
// estimate together with its error estimate.
template <class F>
QuadratureResult integrate_oscillatory_detailed(F&& f, double t_start, double t_end,
                                                double characteristic_angular_frequency,
                                                const QuadratureSpec& spec) {
    spec.validate();
    if (!std::isfinite(t_start) || !std::isfinite(t_end) || !(t_end > t_start))
        throw DomainError("integrate_oscillatory: need finite t_end > t_start");
    if (!std::isfinite(characteristic_angular_frequency) || characteristic_angular_frequency < 0.0)
        throw DomainError("integrate_oscillatory: angular frequency must be finite and >= 0");

    const GaussLegendreRule rule(spec.nodes_per_panel);
    const auto& xs = rule.nodes();
    const auto& ws = rule.weights();

    struct Level {
        double value;
        double magnitude;
    };

    auto estimate = [&](std::int64_t panels) -> Level {
        const double width = (t_end - t_start) / static_cast<double>(panels);
        const double half = 0.5 * width;
        detail::CompensatedSum total;
        double magnitude = 0.0;
        for (std::int64_t p = 0; p < panels; ++p) {
            const double mid = t_start + (static_cast<double>(p) + 0.5) * width;
            double panel = 0.0;
            double panel_abs = 0.0;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                const double v = f(mid + half * xs[i]);
                if (!std::isfinite(v))
                    throw DomainError("integrate_oscillatory: integrand is not finite at t = " +
                                      std::to_string(mid + half * xs[i]));
                panel += ws[i] * v;
                panel_abs += ws[i] * std::abs(v);
            }
            total.add(half * panel);
            magnitude += half * panel_abs;
        }
        return {total.value(), magnitude};
    };

    std::int64_t panels = detail::initial_panel_count(t_start, t_end, characteristic_angular_frequency, spec);
    Level previous = estimate(panels);
    Level latest = previous;
    constexpr std::int64_t kPanelCeiling = std::int64_t{1} << 40;

    for (int r = 1; r <= spec.max_refinements && panels <= kPanelCeiling / 2; ++r) {
        panels *= 2;
        latest = estimate(panels);
        const double diff = std::abs(latest.value - previous.value);
        const double scale = std::max(std::abs(latest.value), std::abs(previous.value));
        const double floor = detail::kRoundoffUlps * std::numeric_limits<double>::epsilon() * latest.magnitude;
        if (diff <= spec.relative_tolerance * scale || diff <= floor)
            return {latest.value, diff, latest.magnitude, panels, r};
        if (r < spec.max_refinements) previous = latest;
    }
    throw ConvergenceError("integrate_oscillatory: tolerance not met after " +
                               std::to_string(spec.max_refinements) + " refinements",
                           previous.value, latest.value);
}

template <class F>
double integrate_oscillatory(F&& f, double t_start, double t_end, double characteristic_angular_frequency,
                             const QuadratureSpec& spec) {
    return integrate_oscillatory_detailed(std::forward<F>(f), t_start, t_end, characteristic_angular_frequency,
                                          spec)
        .value;
}

}  // namespace dephase::numerics
