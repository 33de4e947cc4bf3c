#pragma once

#include <span>
#include <string_view>

#include "irs/log_prob.hpp"

namespace irs {

/// Geometry and link budget of a single-antenna source/destination pair
/// assisted by an N-element reflecting surface with unit reflection
/// coefficients. Distances in metres, SNRs on the linear scale.
struct SystemConfig {
    int n_elements = 8;
    double d1_m = 5.0;  // source -> surface
    double d2_m = 5.0;  // surface -> destination
    double dL_m = 7.0;  // source -> destination
    double v1 = 2.5;
    double v2 = 2.5;
    double vL = 3.5;
    double gamma_bar = 1.0;  // outage threshold SNR

    /// Throws std::invalid_argument naming the first offending field.
    void validate() const;

    /// Cascaded path loss d1^{-v1} d2^{-v2}.
    double beta_r() const;
    /// Direct-link path loss relative to the cascaded one, dL^{-vL} / beta_R.
    double alpha_l() const;

    friend bool operator==(const SystemConfig&, const SystemConfig&) = default;
};

enum class Scenario { NoDirectLink, WithDirectLink };

std::string_view scenario_name(Scenario s);

struct OutageQuery {
    SystemConfig config;
    Scenario scenario = Scenario::NoDirectLink;
    double gamma_t = 1.0;  // transmit SNR P / sigma_u^2

    void validate() const;
};

double db_to_linear(double db);
double linear_to_db(double linear);

/// Channel-gain threshold s = sqrt(gamma_bar / (gamma_t beta_R)); the outage
/// probability is the CDF of the composite channel gain evaluated at s.
double channel_threshold(const OutageQuery& q);

struct CurvePoint {
    double gamma_t;  // linear
    LogProb outage;
};

/// Least-squares slope of -log10(P_out) against log10(gamma_t).
/// Requires >= 2 points, strictly increasing gamma_t and finite outage values.
double diversity_order_estimate(std::span<const CurvePoint> curve);

}  // namespace irs
