#pragma once

#include <span>
#include <utility>

namespace dephase::numerics {

struct SlopeFit {
    double exponent = 0.0;
    double intercept = 0.0;
    double residual_rms = 0.0;
    int n_points = 0;

    friend bool operator==(const SlopeFit&, const SlopeFit&) = default;
};

struct Sample2D {
    double x = 0.0;
    double y = 0.0;
};

// Least-squares line through (ln x, ln y). Requires >= 2 samples with
// strictly positive coordinates and at least two distinct x.
SlopeFit fit_loglog_slope(std::span<const Sample2D> samples);

}  // namespace dephase::numerics
