// Bessel J0/Y0 and the 2D outgoing Green's function (i/4) H0^(1)(kr).
//
// Power series below x = 12, Hankel asymptotic expansion above, both
// accumulated in long double. The crossover sits where the two methods
// overlap at ~1e-13 absolute error: the asymptotic series has an intrinsic
// accuracy floor near its optimal truncation (~5e-10 at x = 8) that only
// drops below 1e-12 once x > ~11, while the power series keeps full
// precision there.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "ainv/common.hpp"

namespace ainv {

namespace detail {

inline constexpr long double kEulerGamma = 0.57721566490153286060651209008240243104L;

struct J0Y0 {
    double j0;
    double y0;
};

inline J0Y0 bessel_j0y0_series(double x) {
    const long double q = static_cast<long double>(x) * x / 4.0L;
    long double term = 1.0L;   // (-1)^m q^m / (m!)^2
    long double j0 = 1.0L;
    long double s = 0.0L;      // sum (-1)^{m+1} H_m q^m / (m!)^2
    long double hm = 0.0L;
    for (int m = 1; m < 200; ++m) {
        term *= -q / (static_cast<long double>(m) * m);
        hm += 1.0L / m;
        j0 += term;
        s -= term * hm;
        if (std::abs(term) < 1e-22L) break;
    }
    const long double y0 =
        (2.0L / static_cast<long double>(kPi)) * ((std::log(static_cast<long double>(x) / 2.0L) + kEulerGamma) * j0 + s);
    return {static_cast<double>(j0), static_cast<double>(y0)};
}

inline J0Y0 bessel_j0y0_asymptotic(double x) {
    // H0^(1)(x) ~ sqrt(2/(pi x)) e^{i(x - pi/4)} sum_m (-i)^m c_m / x^m,
    // c_m = prod_{j=1..m} (2j-1)^2 / (8j), truncated at the smallest term.
    const long double lx = static_cast<long double>(x);
    long double P = 0.0L, Q = 0.0L;
    long double cm = 1.0L;
    long double t = 1.0L, prev = 1e30L;
    for (int m = 0; m < 80; ++m) {
        if (m > 0) {
            cm *= static_cast<long double>(2 * m - 1) * (2 * m - 1) / (8.0L * m);
            t = cm / std::pow(lx, static_cast<long double>(m));
        }
        if (t > prev) break;
        prev = t;
        switch (m % 4) {
            case 0: P += t; break;
            case 1: Q -= t; break;
            case 2: P -= t; break;
            case 3: Q += t; break;
        }
    }
    const long double amp = std::sqrt(2.0L / (static_cast<long double>(kPi) * lx));
    const long double ph = lx - static_cast<long double>(kPi) / 4.0L;
    const long double c = std::cos(ph), s = std::sin(ph);
    return {static_cast<double>(amp * (c * P - s * Q)), static_cast<double>(amp * (s * P + c * Q))};
}

inline constexpr double kSeriesAsymptoticSplit = 12.0;

}  // namespace detail

inline double bessel_j0(double x) {
    x = std::abs(x);
    if (x == 0.0) return 1.0;
    return x <= detail::kSeriesAsymptoticSplit ? detail::bessel_j0y0_series(x).j0
                                               : detail::bessel_j0y0_asymptotic(x).j0;
}

inline double bessel_y0(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("bessel_y0: x must be positive");
    return x <= detail::kSeriesAsymptoticSplit ? detail::bessel_j0y0_series(x).y0
                                               : detail::bessel_j0y0_asymptotic(x).y0;
}

// (i/4) H0^(1)(kr), the outgoing fundamental solution of the 2D Helmholtz
// operator (up to the k^2 factor applied by the scattering integral).
inline Complex greens_h0(double k, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("greens_h0: r must be positive");
    if (!(k > 0.0)) throw std::invalid_argument("greens_h0: k must be positive");
    const double x = k * r;
    const detail::J0Y0 v = x <= detail::kSeriesAsymptoticSplit ? detail::bessel_j0y0_series(x)
                                                               : detail::bessel_j0y0_asymptotic(x);
    // (i/4)(J0 + i Y0) = (-Y0 + i J0)/4
    return Complex(-0.25 * v.y0, 0.25 * v.j0);
}

}  // namespace ainv
