#pragma once

// Reference computations used only by the tests. Everything here is built
// from Boost quadrature and Boost special functions, never from the library
// under test, so agreement is evidence rather than tautology.

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>

namespace irs::test {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// int_a^b f over a finite or half-infinite interval.
inline double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-14) {
    if (std::isinf(b)) {
        return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, tol);
    }
    boost::math::quadrature::tanh_sinh<double> rule;
    return rule.integrate(f, a, b, tol);
}

/// K0(x) = e^{-x} int_0^inf exp(-x (cosh u - 1)) du.
inline double k0_integral(double x) {
    const double scaled = integrate([x](double u) { return std::exp(-x * (std::cosh(u) - 1.0)); }, 0.0, kInf);
    return std::exp(-x) * scaled;
}

/// ln[(2/sqrt pi) int_x^inf e^{-u^2} du] for x >= 0, with e^{-x^2} factored
/// out so the result stays meaningful past the double underflow point.
inline double log_erfc_integral(double x) {
    const double tail =
        integrate([x](double v) { return std::exp(-v * (v + 2.0 * x)); }, 0.0, kInf);
    return -x * x + std::log(2.0 * std::numbers::inv_sqrtpi * tail);
}

/// int_a^inf t^n e^{-t} dt.
inline double upper_gamma_integral(int n, double a) {
    boost::math::quadrature::exp_sinh<double> rule;
    return std::exp(-a) * rule.integrate(
                               [n, a](double u) {
                                   if (!(u < 1e4)) return 0.0;
                                   return std::exp(n * std::log(a + u) - u);
                               },
                               0.0, kInf);
}

/// Density of G = |h1||h2|, using Boost's K0.
inline double density_g(double x) { return x <= 0.0 ? 0.0 : 4.0 * x * boost::math::cyl_bessel_k(0, 2.0 * x); }

/// int_0^inf x^k f_G(x) dx.
inline double moment_g(int k) {
    auto f = [k](double x) { return std::pow(x, k) * density_g(x); };
    return integrate(f, 0.0, 1.0) + integrate(f, 1.0, kInf);
}

/// P(G <= s) conditioned on the first magnitude r ~ 2r e^{-r^2}:
///   int_0^inf 2r e^{-r^2} (1 - e^{-s^2/r^2}) dr.  No Bessel function needed.
inline double cdf_g(double s) {
    auto f = [s](double r) {
        if (r <= 0.0) return 0.0;
        return -2.0 * r * std::exp(-r * r) * std::expm1(-s * s / (r * r));
    };
    return integrate(f, 0.0, 1.0) + integrate(f, 1.0, kInf);
}

/// E[e^{-tD}] for D Rayleigh with E[D^2] = alpha, by quadrature of the density.
inline double laplace_d_integral(double t, double alpha) {
    auto f = [t, alpha](double x) { return 2.0 * x / alpha * std::exp(-x * x / alpha - t * x); };
    return integrate(f, 0.0, kInf);
}

/// Golden-section search for the minimiser of a unimodal f on [a, b].
inline double golden_section(const std::function<double(double)>& f, double a, double b, int iters = 200) {
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - r * (b - a);
    double d = a + r * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < iters && b - a > 1e-15 * std::abs(a + b); ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

/// Root of f on [a, b] by plain bisection; f(a) and f(b) must differ in sign.
inline double bisect(const std::function<double(double)>& f, double a, double b) {
    double fa = f(a);
    for (int i = 0; i < 300; ++i) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        const double fm = f(m);
        if ((fm < 0) == (fa < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace irs::test
