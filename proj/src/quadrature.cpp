#include "dephase/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace dephase::numerics {

void QuadratureSpec::validate() const {
    if (panels_per_period < 8)
        throw DomainError("QuadratureSpec: panels_per_period must be >= 8, got " + std::to_string(panels_per_period));
    if (nodes_per_panel < 4)
        throw DomainError("QuadratureSpec: nodes_per_panel must be >= 4, got " + std::to_string(nodes_per_panel));
    if (!(relative_tolerance > 0.0 && relative_tolerance <= 1e-3))
        throw DomainError("QuadratureSpec: relative_tolerance must lie in (0, 1e-3]");
    if (max_refinements < 1)
        throw DomainError("QuadratureSpec: max_refinements must be >= 1");
}

GaussLegendreRule::GaussLegendreRule(int n) {
    if (n < 1) throw DomainError("GaussLegendreRule: need at least one node");
    using real = long double;
    nodes_.resize(static_cast<std::size_t>(n));
    weights_.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        real x = std::cos(std::numbers::pi_v<real> * (static_cast<real>(i) + 0.75L) / (static_cast<real>(n) + 0.5L));
        real dp = 0.0L;
        for (int it = 0; it < 100; ++it) {
            real p0 = 1.0L;
            real p1 = x;
            for (int k = 2; k <= n; ++k) {
                const real pk = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / static_cast<real>(k);
                p0 = p1;
                p1 = pk;
            }
            const real pn = n == 1 ? x : p1;
            const real pn1 = n == 1 ? 1.0L : p0;
            dp = static_cast<real>(n) * (x * pn - pn1) / (x * x - 1.0L);
            const real dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-19L) break;
        }
        const real w = 2.0L / ((1.0L - x * x) * dp * dp);
        nodes_[static_cast<std::size_t>(i)] = static_cast<double>(-x);
        nodes_[static_cast<std::size_t>(n - 1 - i)] = static_cast<double>(x);
        weights_[static_cast<std::size_t>(i)] = static_cast<double>(w);
        weights_[static_cast<std::size_t>(n - 1 - i)] = static_cast<double>(w);
    }
    if (n % 2 == 1) nodes_[static_cast<std::size_t>(n / 2)] = 0.0;
}

namespace detail {

std::int64_t initial_panel_count(double t_start, double t_end, double omega, const QuadratureSpec& spec) {
    const double periods = omega > 0.0 ? (t_end - t_start) * omega / (2.0 * std::numbers::pi) : 1.0;
    const double wanted = std::ceil(periods * spec.panels_per_period);
    if (!(wanted < 1e15)) throw DomainError("integrate_oscillatory: interval spans too many periods");
    return std::max<std::int64_t>(spec.panels_per_period, static_cast<std::int64_t>(wanted));
}

}  // namespace detail

}  // namespace dephase::numerics
