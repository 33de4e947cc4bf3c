#include "irs/saddlepoint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "irs/laplace.hpp"
#include "irs/specfun.hpp"

namespace irs::saddlepoint {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_args(double s, int n, const char* fn) {
    if (!(s > 0.0)) throw std::domain_error(std::string(fn) + ": argument must be positive");
    if (n < 1) throw std::domain_error(std::string(fn) + ": n must be >= 1");
}

// ln(2n/s) - 1
double excess_log(double s, int n) { return std::log(2.0 * n / s) - 1.0; }

// ln Gamma(n+1, a) allowing a tiny negative a from rounding at s = 2n/e.
double log_gamma_tail(int n, double a) {
    if (a < 0.0) return a > -1e-12 * (n + 1) ? specfun::log_upper_gamma_int(n, 0.0) : kNaN;
    return specfun::log_upper_gamma_int(n, a);
}

TailValue make_cdf(double log_value, bool valid, Method method) {
    if (!std::isnan(log_value)) log_value = std::min(log_value, 0.0);
    return {LogProb{log_value}, method, valid};
}

}  // namespace

double saddlepoint_numeric(double x, int n) {
    require_args(x, n, "saddlepoint_numeric");
    const double target = x / n;
    if (target >= std::numbers::pi / 4.0) {
        throw std::domain_error("saddlepoint_numeric: root not bracketed, x/n = " + std::to_string(target) +
                                " is not below E[G] = pi/4");
    }
    // The tilted mean decreases from pi/4 and stays below 2/t.
    double hi = std::max(1.0, 2.0 / target);
    while (laplace::tilted_mean_g(hi) > target) hi *= 2.0;
    double lo = 0.5 * hi;
    while (laplace::tilted_mean_g(lo) <= target) {
        hi = lo;
        lo *= 0.5;
    }
    for (int i = 0; i < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * hi; ++i) {
        const double mid = std::midpoint(lo, hi);
        if (laplace::tilted_mean_g(mid) > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double t = std::midpoint(lo, hi);
    return t;
}

double asymptotic_saddlepoint(double x, int n) {
    require_args(x, n, "asymptotic_saddlepoint");
    return 2.0 * n / x;
}

bool in_asymptotic_regime(double s, int n) { return s > 0.0 && n >= 1 && excess_log(s, n) > 0.0; }

TailValue log_cdf_h1(double s, int n) {
    require_args(s, n, "log_cdf_h1");
    const double el = excess_log(s, n);
    const double prefactor = n * std::numbers::ln2 - n * std::log(static_cast<double>(n)) -
                             0.5 * std::log(4.0 * std::numbers::pi * n);
    return make_cdf(prefactor + log_gamma_tail(n, 2.0 * n * el), el > 0.0, Method::Saddlepoint);
}

TailValue log_cdf_h1_leading(double s, int n) {
    require_args(s, n, "log_cdf_h1_leading");
    const double el = excess_log(s, n);
    double value = kNaN;
    if (el >= 0.0) {
        value = 2.0 * n * std::numbers::ln2 - 2.0 * n * el + n * std::log(el) -
                0.5 * std::log(4.0 * std::numbers::pi * n);
    }
    return make_cdf(value, el > 0.0, Method::SaddlepointLeading);
}

double rate_function(double s, int n) {
    require_args(s, n, "rate_function");
    const double el = excess_log(s, n);
    if (!(el > 0.0)) throw std::domain_error("rate_function: requires s < 2n/e");
    return -2.0 * std::numbers::ln2 + 2.0 * el - std::log(el) + std::log(4.0 * std::numbers::pi * n) / (2.0 * n);
}

TailValue log_cdf_h2(double s, int n, double alpha_l) {
    require_args(s, n, "log_cdf_h2");
    if (!(alpha_l > 0.0)) throw std::domain_error("log_cdf_h2: alpha_l must be positive");
    const double el = excess_log(s, n);
    const double np1 = n + 1.0;
    const double prefactor = n * std::numbers::ln2 + 0.5 * std::log(static_cast<double>(n)) - 2.0 -
                             0.5 * std::log(std::numbers::pi) - std::log(alpha_l) - np1 * std::log(np1);
    return make_cdf(prefactor + log_gamma_tail(n, 2.0 * np1 * el), el > 0.0, Method::Saddlepoint);
}

TailValue log_pdf_h1(double x, int n) {
    require_args(x, n, "log_pdf_h1");
    const double el = excess_log(x, n);
    double value = kNaN;
    if (el >= 0.0) {
        value = 2.0 * n + n * std::log(el) - (2.0 * n - 1.0) * std::log(n / x) -
                0.5 * std::log(std::numbers::pi * n);
    }
    return {LogProb{value}, Method::Saddlepoint, el > 0.0};
}

ErfcComparison erfc_asymptotic_check(double x, int n, double alpha_l) {
    require_args(x, n, "erfc_asymptotic_check");
    if (!(alpha_l > 0.0)) throw std::domain_error("erfc_asymptotic_check: alpha_l must be positive");
    const double arg = std::sqrt(alpha_l) * n / x;
    const double arg2 = arg * arg;  // alpha_l n^2 / x^2
    const double correction = 1.0 - 0.5 / arg2;
    const double log_prefactor = std::log(x / (std::sqrt(std::numbers::pi * alpha_l) * n));
    ErfcComparison out{};
    out.exact = specfun::erfc(arg);
    out.asymptotic = std::exp(log_prefactor - arg2) * correction;
    out.log_ratio = correction > 0.0 ? specfun::log_erfc(arg) - (log_prefactor - arg2 + std::log(correction))
                                     : kNaN;
    return out;
}

TailValue saddlepoint_outage(const OutageQuery& q) {
    const double s = channel_threshold(q);
    const int n = q.config.n_elements;
    if (q.scenario == Scenario::WithDirectLink) return log_cdf_h2(s, n, q.config.alpha_l());
    return log_cdf_h1(s, n);
}

TailValue saddlepoint_leading_outage(const OutageQuery& q) {
    if (q.scenario == Scenario::WithDirectLink) {
        throw std::invalid_argument("saddlepoint-leading is defined only without the direct link");
    }
    return log_cdf_h1_leading(channel_threshold(q), q.config.n_elements);
}

}  // namespace irs::saddlepoint
