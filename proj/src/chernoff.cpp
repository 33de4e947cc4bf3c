#include "irs/chernoff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "irs/laplace.hpp"

namespace irs::chernoff {

void GdmConfig::validate() const {
    if (!(t0 > 0.0)) throw std::invalid_argument("GdmConfig: t0 must be positive");
    if (!(epsilon > 0.0)) throw std::invalid_argument("GdmConfig: epsilon must be positive");
    if (!(backtrack_alpha > 0.0 && backtrack_alpha < 0.5)) {
        throw std::invalid_argument("GdmConfig: backtrack_alpha must lie in (0, 0.5)");
    }
    if (!(backtrack_beta > 0.0 && backtrack_beta < 1.0)) {
        throw std::invalid_argument("GdmConfig: backtrack_beta must lie in (0, 1)");
    }
    if (max_iters < 1) throw std::invalid_argument("GdmConfig: max_iters must be positive");
}

ChernoffObjective::ChernoffObjective(double s, int n, double alpha_l) : s_(s), n_(n), alpha_l_(alpha_l) {
    if (!(s > 0.0)) throw std::domain_error("ChernoffObjective: s must be positive");
    if (n < 1) throw std::domain_error("ChernoffObjective: n must be >= 1");
}

ChernoffObjective ChernoffObjective::no_link(double s, int n) { return {s, n, 0.0}; }

ChernoffObjective ChernoffObjective::with_link(double s, int n, double alpha_l) {
    if (!(alpha_l > 0.0)) throw std::domain_error("ChernoffObjective: alpha_l must be positive");
    return {s, n, alpha_l};
}

double ChernoffObjective::value(double t) const {
    double v = t * s_ + n_ * std::log(laplace::laplace_g(t));
    if (alpha_l_ > 0.0) v += std::log(laplace::laplace_d(t, alpha_l_));
    return v;
}

double ChernoffObjective::slope(double t) const {
    double g = s_ - n_ * laplace::tilted_mean_g(t);
    if (alpha_l_ > 0.0) g += laplace::laplace_d_derivative(t, alpha_l_) / laplace::laplace_d(t, alpha_l_);
    return g;
}

double ChernoffObjective::slope_at_zero() const {
    double g = s_ - n_ * std::numbers::pi / 4.0;
    if (alpha_l_ > 0.0) g -= std::sqrt(std::numbers::pi * alpha_l_) / 2.0;
    return g;
}

double objective_no_link(double t, double s, int n) { return ChernoffObjective::no_link(s, n).value(t); }

double objective_with_link(double t, double s, int n, double alpha_l) {
    return ChernoffObjective::with_link(s, n, alpha_l).value(t);
}

ChernoffResult minimize(const ChernoffObjective& objective, const GdmConfig& cfg) {
    cfg.validate();
    ChernoffResult result;
    if (objective.slope_at_zero() >= 0.0) {
        result.log_bound = LogProb::one();
        result.converged = true;
        return result;
    }

    constexpr double eps = std::numeric_limits<double>::epsilon();
    double t = cfg.t0;
    double f = objective.value(t);
    double g = objective.slope(t);
    double best_t = t;
    double best_f = f;
    // Each line search starts from twice the last accepted step, so the step
    // length tracks the local curvature instead of restarting at 1.
    double trial = 1.0;
    int it = 0;
    bool stalled = false;
    for (; it < cfg.max_iters && std::abs(g) > cfg.epsilon; ++it) {
        const double dir = -g;
        double xi = trial;
        double t_new = t;
        double f_new = f;
        double g_new = g;
        bool accepted = false;
        while (!accepted) {
            if (std::abs(xi * dir) <= 4.0 * eps * t) {
                stalled = true;
                break;
            }
            t_new = t + xi * dir;
            if (t_new > 0.0) {
                f_new = objective.value(t_new);
                // f = t s + (negative log terms of similar size), so its rounding
                // error scales with t s rather than with |f|
                const double noise = 16.0 * eps * (std::abs(f) + 2.0 * t_new * objective.threshold());
                const double decrease = cfg.backtrack_alpha * xi * g * g;
                if (decrease > noise) {
                    accepted = f_new <= f - decrease;
                } else if (f_new <= f + noise) {
                    // Armijo is below the resolution of f; fall back on the gradient.
                    g_new = objective.slope(t_new);
                    accepted = std::abs(g_new) < std::abs(g);
                }
            }
            if (!accepted) xi *= cfg.backtrack_beta;
        }
        if (stalled) break;
        t = t_new;
        f = f_new;
        g = objective.slope(t);
        trial = 2.0 * xi;
        if (f < best_f) {
            best_f = f;
            best_t = t;
        }
    }

    result.iterations = it;
    result.converged = std::abs(g) <= cfg.epsilon;
    if (result.converged || f <= best_f) {
        result.t_star = t;
        result.log_bound = LogProb{std::min(f, 0.0)};
        result.gradient = g;
    } else {
        result.t_star = best_t;
        result.log_bound = LogProb{std::min(best_f, 0.0)};
        result.gradient = objective.slope(best_t);
    }
    return result;
}

ChernoffResult chernoff_outage(const OutageQuery& q, const GdmConfig& cfg) {
    const double s = channel_threshold(q);
    const int n = q.config.n_elements;
    if (q.scenario == Scenario::WithDirectLink) {
        return minimize(ChernoffObjective::with_link(s, n, q.config.alpha_l()), cfg);
    }
    return minimize(ChernoffObjective::no_link(s, n), cfg);
}

}  // namespace irs::chernoff
