#include "irs/sysmodel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace irs {
namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::invalid_argument(std::string("SystemConfig: ") + name +
                                    " must be positive and finite, got " + std::to_string(value));
    }
}

}  // namespace

void SystemConfig::validate() const {
    if (n_elements < 1) {
        throw std::invalid_argument("SystemConfig: n_elements must be >= 1, got " +
                                    std::to_string(n_elements));
    }
    require_positive(d1_m, "d1_m");
    require_positive(d2_m, "d2_m");
    require_positive(dL_m, "dL_m");
    require_positive(v1, "v1");
    require_positive(v2, "v2");
    require_positive(vL, "vL");
    require_positive(gamma_bar, "gamma_bar");
}

double SystemConfig::beta_r() const { return std::pow(d1_m, -v1) * std::pow(d2_m, -v2); }

double SystemConfig::alpha_l() const { return std::pow(dL_m, -vL) / beta_r(); }

std::string_view scenario_name(Scenario s) {
    return s == Scenario::WithDirectLink ? "direct" : "no-direct";
}

void OutageQuery::validate() const {
    config.validate();
    if (!(gamma_t > 0.0) || !std::isfinite(gamma_t)) {
        throw std::invalid_argument("OutageQuery: gamma_t must be positive, got " + std::to_string(gamma_t));
    }
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double channel_threshold(const OutageQuery& q) {
    q.validate();
    return std::sqrt(q.config.gamma_bar / (q.gamma_t * q.config.beta_r()));
}

double diversity_order_estimate(std::span<const CurvePoint> curve) {
    if (curve.size() < 2) throw std::invalid_argument("diversity_order_estimate: need at least 2 points");
    const auto n = static_cast<double>(curve.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const auto& p = curve[i];
        if (!(p.gamma_t > 0.0)) throw std::invalid_argument("diversity_order_estimate: gamma_t must be positive");
        if (i > 0 && !(p.gamma_t > curve[i - 1].gamma_t)) {
            throw std::invalid_argument("diversity_order_estimate: gamma_t must be strictly increasing");
        }
        if (!std::isfinite(p.outage.log_value)) {
            throw std::invalid_argument("diversity_order_estimate: outage values must be finite and positive");
        }
        mx += std::log10(p.gamma_t);
        my += -p.outage.log10();
    }
    mx /= n;
    my /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (const auto& p : curve) {
        const double dx = std::log10(p.gamma_t) - mx;
        sxy += dx * (-p.outage.log10() - my);
        sxx += dx * dx;
    }
    if (sxx == 0.0) throw std::invalid_argument("diversity_order_estimate: degenerate gamma_t grid");
    return sxy / sxx;
}

}  // namespace irs
