#include "irs/laplace.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "irs/specfun.hpp"

namespace irs::laplace {
namespace {

// Below this |theta^2| the closed forms lose digits to cancellation
// (relative error ~ eps / theta^4 for the derivative), so the series is used.
constexpr double kSeriesRadius = 1.0;
constexpr double kSqrtPi = 1.0 / std::numbers::inv_sqrtpi;

void require_tilt(double t, const char* fn) {
    if (!(t > 0.0)) throw std::domain_error(std::string(fn) + ": t must be positive, got " + std::to_string(t));
}

// (sin x / x) as a series in q = x^2; valid for negative q (sinh) too.
double sinc_series(double q) {
    double term = 1.0;
    double sum = 1.0;
    for (int j = 1; j < 16; ++j) {
        term *= -q / ((2.0 * j) * (2.0 * j + 1.0));
        sum += term;
    }
    return sum;
}

// (sin x - x cos x) / x^3 = sum_{k>=1} (-1)^{k+1} 2k / (2k+1)! q^{k-1}
double numerator_series(double q) {
    double inv_fact = 1.0 / 6.0;  // 1/(2k+1)! at k = 1
    double qpow = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 16; ++k) {
        sum += (k % 2 == 1 ? 1.0 : -1.0) * 2.0 * k * inv_fact * qpow;
        inv_fact /= (2.0 * k + 2.0) * (2.0 * k + 3.0);
        qpow *= q;
    }
    return sum;
}

// [x (1 + 2cos^2 x) - 3 sin x cos x] / x^5
//   = sum_{k>=2} (-1)^k 4^k (2k-2) / (2k+1)! q^{k-2}
double derivative_numerator_series(double q) {
    double coef = 16.0 / 120.0;  // 4^k / (2k+1)! at k = 2
    double qpow = 1.0;
    double sum = 0.0;
    for (int k = 2; k < 20; ++k) {
        sum += (k % 2 == 0 ? 1.0 : -1.0) * coef * (2.0 * k - 2.0) * qpow;
        coef *= 4.0 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
        qpow *= q;
    }
    return sum;
}

// Signed squared angle: theta^2 for t <= 2, -phi^2 for t > 2.
double angle_square(double t) {
    if (t <= 2.0) {
        const double theta = std::acos(0.5 * t);
        return theta * theta;
    }
    const double phi = std::acosh(0.5 * t);
    return -phi * phi;
}

}  // namespace

double laplace_g(double t) {
    require_tilt(t, "laplace_g");
    if (std::isinf(t)) return 0.0;
    const double q = angle_square(t);
    if (std::abs(q) < kSeriesRadius) {
        const double s = sinc_series(q);
        return numerator_series(q) / (s * s * s);
    }
    if (t < 2.0) {
        const double theta = std::acos(0.5 * t);
        const double sn = std::sin(theta);
        return (sn - theta * 0.5 * t) / (sn * sn * sn);
    }
    const double phi = std::acosh(0.5 * t);
    const double sh = std::sinh(phi);
    // (phi coth phi - 1) / sinh^2 phi, with cosh phi = t/2
    return (phi * 0.5 * t / sh - 1.0) / (sh * sh);
}

double laplace_g_derivative(double t) {
    require_tilt(t, "laplace_g_derivative");
    if (std::isinf(t)) return 0.0;
    const double q = angle_square(t);
    if (std::abs(q) < kSeriesRadius) {
        const double s = sinc_series(q);
        return -0.5 * derivative_numerator_series(q) / (s * s * s * s * s);
    }
    const double c = 0.5 * t;
    if (t < 2.0) {
        const double theta = std::acos(c);
        const double sn = std::sin(theta);
        const double num = theta * (1.0 + 2.0 * c * c) - 3.0 * sn * c;
        const double sn2 = sn * sn;
        return -num / (2.0 * sn2 * sn2 * sn);
    }
    const double phi = std::acosh(c);
    const double sh = std::sinh(phi);
    const double sh2 = sh * sh;
    // -[phi (1 + 2 cosh^2) - 3 sinh cosh] / (2 sinh^5), divided through by sinh^2
    const double num = phi * (1.0 / sh2 + 2.0 * c * c / sh2) - 3.0 * c / sh;
    return -num / (2.0 * sh2 * sh);
}

double tilted_mean_g(double t) { return -laplace_g_derivative(t) / laplace_g(t); }

double laplace_d(double t, double alpha_l) {
    require_tilt(t, "laplace_d");
    if (!(alpha_l > 0.0)) throw std::domain_error("laplace_d: alpha_l must be positive");
    const double y = 0.5 * std::sqrt(alpha_l) * t;
    if (y < 2.0) return 1.0 - kSqrtPi * y * specfun::erfcx(y);
    if (std::isinf(y)) return 0.0;
    const double tail = specfun::erfc_cf_tail(1, y);
    return tail / (y + tail);
}

double laplace_d_derivative(double t, double alpha_l) {
    require_tilt(t, "laplace_d_derivative");
    if (!(alpha_l > 0.0)) throw std::domain_error("laplace_d_derivative: alpha_l must be positive");
    const double scale = 0.5 * std::sqrt(alpha_l);
    const double y = scale * t;
    if (y < 2.0) {
        return scale * (2.0 * y - kSqrtPi * (1.0 + 2.0 * y * y) * specfun::erfcx(y));
    }
    if (std::isinf(y)) return 0.0;
    const double tail2 = specfun::erfc_cf_tail(2, y);
    const double tail1 = 0.5 / (y + tail2);
    return -scale * tail2 / ((y + tail2) * (y + tail1));
}

double quadrature_oracle_g(double t) {
    require_tilt(t, "quadrature_oracle_g");
    auto integrand = [t](double x) {
        if (x <= 0.0) return 0.0;
        return 4.0 * x * specfun::bessel_k0(2.0 * x) * std::exp(-t * x);
    };
    constexpr double abs_tol = 1e-11;
    // tanh-sinh absorbs the x ln x endpoint behaviour at 0; the smooth,
    // exponentially decaying remainder goes to Gauss-Kronrod.
    thread_local boost::math::quadrature::tanh_sinh<double> near_rule;
    double err_near = 0.0;
    double err_far = 0.0;
    const double near = near_rule.integrate(integrand, 0.0, 1.0, 1e-14, &err_near);
    const double far = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, 1.0, std::numeric_limits<double>::infinity(), 15, 1e-14, &err_far);
    if (!(err_near + err_far <= abs_tol)) {
        throw ConvergenceError("quadrature_oracle_g: error estimate " + std::to_string(err_near + err_far) +
                               " exceeds tolerance at t = " + std::to_string(t));
    }
    return near + far;
}

}  // namespace irs::laplace
