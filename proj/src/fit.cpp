#include "dephase/fit.hpp"

#include <cmath>

#include "dephase/errors.hpp"

namespace dephase::numerics {

SlopeFit fit_loglog_slope(std::span<const Sample2D> samples) {
    if (samples.size() < 2) throw DomainError("fit_loglog_slope: need at least 2 samples");
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto& s : samples) {
        if (!(s.x > 0.0) || !(s.y > 0.0) || !std::isfinite(s.x) || !std::isfinite(s.y))
            throw DomainError("fit_loglog_slope: coordinates must be finite and strictly positive");
        mean_x += std::log(s.x);
        mean_y += std::log(s.y);
    }
    const auto n = static_cast<double>(samples.size());
    mean_x /= n;
    mean_y /= n;

    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& s : samples) {
        const double dx = std::log(s.x) - mean_x;
        sxx += dx * dx;
        sxy += dx * (std::log(s.y) - mean_y);
    }
    if (sxx == 0.0) throw DomainError("fit_loglog_slope: all x values coincide");

    SlopeFit fit;
    fit.exponent = sxy / sxx;
    fit.intercept = mean_y - fit.exponent * mean_x;
    double ss = 0.0;
    for (const auto& s : samples) {
        const double r = std::log(s.y) - (fit.intercept + fit.exponent * std::log(s.x));
        ss += r * r;
    }
    fit.residual_rms = std::sqrt(ss / n);
    fit.n_points = static_cast<int>(samples.size());
    return fit;
}

}  // namespace dephase::numerics
