#pragma once

#include "irs/log_prob.hpp"
#include "irs/sysmodel.hpp"

namespace irs::clt {

struct GaussianMoments {
    double mean;
    double variance;
};

/// Moments of G = |h1||h2|: mean pi/4, variance 1 - pi^2/16.
GaussianMoments moments_g();

/// Moments of D = sqrt(alpha_l)|h_L| (Rayleigh, sigma^2 = alpha_l/2).
GaussianMoments moments_d(double alpha_l);

/// ln Phi(z) for the standard normal CDF, accurate for z far below zero.
double log_normal_cdf(double z);

/// Gaussian approximation of the outage probability: Phi((s - mu)/sigma)
/// with mu, sigma^2 summed over the N cascaded paths (plus D when present).
LogProb clt_outage(const OutageQuery& q);

}  // namespace irs::clt
