#include "irs/clt.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "irs/specfun.hpp"

namespace irs::clt {

GaussianMoments moments_g() {
    constexpr double pi = std::numbers::pi;
    return {pi / 4.0, 1.0 - pi * pi / 16.0};
}

GaussianMoments moments_d(double alpha_l) {
    if (!(alpha_l > 0.0)) throw std::domain_error("moments_d: alpha_l must be positive");
    constexpr double pi = std::numbers::pi;
    return {std::sqrt(pi * alpha_l) / 2.0, alpha_l * (1.0 - pi / 4.0)};
}

double log_normal_cdf(double z) {
    if (z < 0.0) return specfun::log_erfc(-z * std::numbers::sqrt2 / 2.0) - std::numbers::ln2;
    return std::log1p(-0.5 * specfun::erfc(z * std::numbers::sqrt2 / 2.0));
}

LogProb clt_outage(const OutageQuery& q) {
    const double s = channel_threshold(q);
    const auto g = moments_g();
    const int n = q.config.n_elements;
    double mean = n * g.mean;
    double variance = n * g.variance;
    if (q.scenario == Scenario::WithDirectLink) {
        const auto d = moments_d(q.config.alpha_l());
        mean += d.mean;
        variance += d.variance;
    }
    return LogProb{log_normal_cdf((s - mean) / std::sqrt(variance))};
}

}  // namespace irs::clt
