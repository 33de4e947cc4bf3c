#pragma once

#include <optional>

#include "irs/log_prob.hpp"
#include "irs/sysmodel.hpp"

namespace irs::chernoff {

/// Parameters of the gradient-descent search with backtracking line search.
struct GdmConfig {
    double t0 = 1.0;
    double epsilon = 1e-8;          // stop when |d/dt ln w| <= epsilon
    double backtrack_alpha = 0.25;  // sufficient-decrease fraction, in (0, 0.5)
    double backtrack_beta = 0.5;    // step shrink factor, in (0, 1)
    int max_iters = 10000;

    void validate() const;
};

struct ChernoffResult {
    std::optional<double> t_star;  // empty: minimum approached as t -> 0+
    LogProb log_bound;             // clamped to <= 0
    int iterations = 0;
    bool converged = false;
    double gradient = 0.0;  // d/dt of the log objective at t_star

    bool at_boundary() const { return !t_star.has_value(); }
};

/// The log of the Chernoff objective
///   ln w(t) = t s + N ln L_G(t)                   (no direct link)
///   ln z(t) = t s + ln L_D(t) + N ln L_G(t)       (with direct link)
/// Both are convex in t because Laplace transforms are log-convex.
class ChernoffObjective {
  public:
    static ChernoffObjective no_link(double s, int n);
    static ChernoffObjective with_link(double s, int n, double alpha_l);

    double value(double t) const;
    double slope(double t) const;
    /// Analytic limit of slope(t) as t -> 0+: s - N pi/4 (- sqrt(pi alpha_l)/2).
    double slope_at_zero() const;

    double threshold() const { return s_; }
    int elements() const { return n_; }
    bool has_direct_link() const { return alpha_l_ > 0.0; }

  private:
    ChernoffObjective(double s, int n, double alpha_l);

    double s_;
    int n_;
    double alpha_l_;  // 0 for the no-link objective
};

double objective_no_link(double t, double s, int n);
double objective_with_link(double t, double s, int n, double alpha_l);

/// Minimises a Chernoff objective over t > 0 by gradient descent with an
/// Armijo backtracking line search. Returns bound 1 at the boundary sentinel
/// when the objective is non-decreasing at 0+. Non-convergence is reported
/// through `converged`; the returned bound is valid either way.
ChernoffResult minimize(const ChernoffObjective& objective, const GdmConfig& cfg = {});

/// Chernoff upper bound on the outage probability of `q`.
ChernoffResult chernoff_outage(const OutageQuery& q, const GdmConfig& cfg = {});

}  // namespace irs::chernoff
