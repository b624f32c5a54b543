#pragma once

// Bessel functions of the first kind, orders 0 and 1.
//
// Two regimes: the ascending power series for |x| <= kSeriesLimit and the
// Hankel asymptotic expansion (truncated at its smallest term) beyond it.
// Both are summed in long double; absolute error is below 1e-12 on [0, 50].

namespace dephase::numerics {

inline constexpr double kBesselSeriesLimit = 12.0;

double bessel_j0(double x);
double bessel_j1(double x);

// Individual regimes, exposed so the switch point can be cross-checked.
namespace bessel_regime {
double series_j0(double x);
double series_j1(double x);
double asymptotic_j0(double x);
double asymptotic_j1(double x);
}  // namespace bessel_regime

}  // namespace dephase::numerics
