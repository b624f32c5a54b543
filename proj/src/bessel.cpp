#include "dephase/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "dephase/errors.hpp"

namespace dephase::numerics {

namespace {

using real = long double;

constexpr real kEps = std::numeric_limits<real>::epsilon();

void require_finite(double x, const char* who) {
    if (!std::isfinite(x)) throw DomainError(std::string(who) + ": argument is not finite");
}

// sum_k (-1)^k (x^2/4)^k / (k! (k + order)!), order in {0, 1}
real ascending_series(real x, int order) {
    const real q = -0.25L * x * x;
    real term = 1.0L;
    real sum = 1.0L;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<real>(k) * static_cast<real>(k + order));
        sum += term;
        if (std::abs(term) <= kEps * std::abs(sum) && static_cast<real>(k) > std::abs(x) * 0.5L) break;
    }
    return sum;
}

struct HankelPQ {
    real p;
    real q;
};

// P and Q of the Hankel expansion for order n, truncated just before the
// smallest term (the series is asymptotic, not convergent).
HankelPQ hankel_pq(real x, int n) {
    const real mu = 4.0L * n * n;
    real p = 1.0L;
    real q = 0.0L;
    real term = 1.0L;
    real last = std::numeric_limits<real>::infinity();
    for (int k = 1; k < 200; ++k) {
        const real odd = static_cast<real>(2 * k - 1);
        const real next = term * (mu - odd * odd) / (static_cast<real>(k) * 8.0L * x);
        if (std::abs(next) >= last) break;
        last = std::abs(next);
        term = next;
        // k = 1, 2, 3, 4, ... contributes +Q, -P, -Q, +P, ...
        switch (k % 4) {
            case 1: q += term; break;
            case 2: p -= term; break;
            case 3: q -= term; break;
            case 0: p += term; break;
        }
        if (std::abs(term) <= kEps * std::abs(p)) break;
    }
    return {p, q};
}

}  // namespace

namespace bessel_regime {

double series_j0(double x) {
    require_finite(x, "series_j0");
    return static_cast<double>(ascending_series(x, 0));
}

double series_j1(double x) {
    require_finite(x, "series_j1");
    return static_cast<double>(0.5L * static_cast<real>(x) * ascending_series(x, 1));
}

double asymptotic_j0(double x) {
    require_finite(x, "asymptotic_j0");
    const real ax = std::abs(static_cast<real>(x));
    if (ax == 0.0L) throw DomainError("asymptotic_j0: argument must be nonzero");
    const auto [p, q] = hankel_pq(ax, 0);
    const real c = std::cos(ax);
    const real s = std::sin(ax);
    // chi = x - pi/4
    const real cos_chi = (c + s) / std::numbers::sqrt2_v<real>;
    const real sin_chi = (s - c) / std::numbers::sqrt2_v<real>;
    const real amp = std::sqrt(2.0L / (std::numbers::pi_v<real> * ax));
    return static_cast<double>(amp * (p * cos_chi - q * sin_chi));
}

double asymptotic_j1(double x) {
    require_finite(x, "asymptotic_j1");
    const real ax = std::abs(static_cast<real>(x));
    if (ax == 0.0L) throw DomainError("asymptotic_j1: argument must be nonzero");
    const auto [p, q] = hankel_pq(ax, 1);
    const real c = std::cos(ax);
    const real s = std::sin(ax);
    // chi = x - 3 pi/4
    const real cos_chi = (s - c) / std::numbers::sqrt2_v<real>;
    const real sin_chi = -(s + c) / std::numbers::sqrt2_v<real>;
    const real amp = std::sqrt(2.0L / (std::numbers::pi_v<real> * ax));
    const real value = amp * (p * cos_chi - q * sin_chi);
    return static_cast<double>(x < 0.0 ? -value : value);
}

}  // namespace bessel_regime

double bessel_j0(double x) {
    require_finite(x, "bessel_j0");
    if (std::abs(x) <= kBesselSeriesLimit) return bessel_regime::series_j0(x);
    return bessel_regime::asymptotic_j0(x);
}

double bessel_j1(double x) {
    require_finite(x, "bessel_j1");
    if (std::abs(x) <= kBesselSeriesLimit) return bessel_regime::series_j1(x);
    return bessel_regime::asymptotic_j1(x);
}

}  // namespace dephase::numerics
