#include "irs/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace irs {

std::string_view method_name(Method m) {
    switch (m) {
        case Method::Chernoff: return "chernoff";
        case Method::Saddlepoint: return "saddlepoint";
        case Method::SaddlepointLeading: return "saddlepoint-leading";
        case Method::Clt: return "clt";
        case Method::MonteCarlo: return "mc";
    }
    return "unknown";
}

namespace specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxIter = 20000;

// K0 for 0 < x <= 2:
//   K0(x) = -(ln(x/2) + gamma) I0(x) + sum_{k>=1} H_k (x^2/4)^k / (k!)^2
double bessel_k0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0;  // (x^2/4)^k / (k!)^2
    double i0 = 1.0;
    double harmonic = 0.0;
    double tail = 0.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * k);
        harmonic += 1.0 / k;
        i0 += term;
        tail += harmonic * term;
        if (term * harmonic < kEps * 1e-2 * tail) break;
    }
    return -(std::log(0.5 * x) + std::numbers::egamma) * i0 + tail;
}

// K0 for x > 2 by Steed's method applied to Temme's continued fraction CF2.
double bessel_k0_cf2(double x) {
    const double a1 = 0.25;  // 1/4 - nu^2 with nu = 0
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 2; i <= kMaxIter; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps * 0.5) break;
    }
    return std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
}

// exp(-x^2) with the rounding error of x*x folded back in.
double exp_minus_square(double x) {
    const double hi = x * x;
    const double lo = std::fma(x, x, -hi);
    return std::exp(-hi) * std::exp(-lo);
}

// erf(x) for 0 <= x < 2 from the all-positive series
//   erf(x) = (2/sqrt(pi)) x e^{-x^2} sum_n (2x^2)^n / (1*3*...*(2n+1)).
double erf_series(double x) {
    const double two_x2 = 2.0 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 500; ++n) {
        term *= two_x2 / (2.0 * n + 1.0);
        sum += term;
        if (term < kEps * 0.25 * sum) break;
    }
    return std::numbers::inv_sqrtpi * 2.0 * x * exp_minus_square(x) * sum;
}

}  // namespace

double bessel_k0(double x) {
    if (!(x > 0.0)) throw std::domain_error("bessel_k0: x must be positive, got " + std::to_string(x));
    if (std::isinf(x)) return 0.0;
    return x <= 2.0 ? bessel_k0_series(x) : bessel_k0_cf2(x);
}

// a_k / (x + a_{k+1} / (x + a_{k+2} / (x + ...))) with a_j = j/2: the tail of
// Laplace's continued fraction  sqrt(pi) erfcx(x) = 1 / (x + tail(1, x)).
// Evaluated by the modified Lentz method; intended for x >= 2.
double erfc_cf_tail(int first, double x) {
    constexpr double tiny = 1e-300;
    double f = x;
    double c = f;
    double d = 0.0;
    for (int j = first + 1; j < first + kMaxIter; ++j) {
        const double a = 0.5 * j;
        d = x + a * d;
        if (std::abs(d) < tiny) d = tiny;
        c = x + a / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < kEps * 0.5) break;
    }
    return 0.5 * first / f;
}

double erfcx(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) {
        // e^{x^2}(2 - erfc(-x))
        if (x < -26.0) return kInf;
        return 2.0 / exp_minus_square(x) - erfcx(-x);
    }
    if (x < 2.0) return (1.0 - erf_series(x)) / exp_minus_square(x);
    if (std::isinf(x)) return 0.0;
    return std::numbers::inv_sqrtpi / (x + erfc_cf_tail(1, x));
}

double erfc(double x) {
    if (std::isnan(x)) return x;
    if (x < 0.0) return 2.0 - erfc(-x);
    if (x < 2.0) return 1.0 - erf_series(x);
    return erfcx(x) * exp_minus_square(x);
}

double log_erfc(double x) {
    if (x < 2.0) return std::log(erfc(x));
    if (std::isinf(x)) return -kInf;
    return std::log(erfcx(x)) - x * x;
}

double log_upper_gamma_int(int n, double a) {
    if (n < 0) throw std::domain_error("log_upper_gamma_int: n must be non-negative");
    if (!(a >= 0.0)) throw std::domain_error("log_upper_gamma_int: a must be non-negative");
    double log_fact = 0.0;  // ln k!
    if (a == 0.0) {
        for (int k = 2; k <= n; ++k) log_fact += std::log(static_cast<double>(k));
        return log_fact;
    }
    if (std::isinf(a)) return -kInf;
    const double log_a = std::log(a);
    // Terms k ln a - ln k! are unimodal in k; accumulate with a running max.
    double max_term = 0.0;
    double scaled_sum = 1.0;  // sum exp(term - max_term), k = 0 contributes 1
    for (int k = 1; k <= n; ++k) {
        log_fact += std::log(static_cast<double>(k));
        const double term = k * log_a - log_fact;
        if (term > max_term) {
            scaled_sum = scaled_sum * std::exp(max_term - term) + 1.0;
            max_term = term;
        } else {
            scaled_sum += std::exp(term - max_term);
        }
    }
    return log_fact - a + max_term + std::log(scaled_sum);
}

double log_sum_exp(std::span<const double> terms) {
    if (terms.empty()) throw std::invalid_argument("log_sum_exp: empty sequence");
    const double m = *std::max_element(terms.begin(), terms.end());
    if (std::isinf(m)) return m;
    double sum = 0.0;
    for (double t : terms) sum += std::exp(t - m);
    return m + std::log(sum);
}

double log_add_exp(double a, double b) {
    const double m = std::max(a, b);
    if (std::isinf(m)) return m;
    return m + std::log1p(std::exp(std::min(a, b) - m));
}

double log_diff_exp(double a, double b) {
    if (b > a) throw std::domain_error("log_diff_exp: requires a >= b");
    if (a == b) return -kInf;
    if (std::isinf(b)) return a;
    const double d = b - a;
    return d > -std::numbers::ln2 ? a + std::log(-std::expm1(d)) : a + std::log1p(-std::exp(d));
}

}  // namespace specfun
}  // namespace irs
