#pragma once

#include "irs/log_prob.hpp"
#include "irs/sysmodel.hpp"

namespace irs::saddlepoint {

/// Root t of  -L_G'(t) / L_G(t) = x / n  on t > 0, found by bisection.
/// Only the lower tail has a positive saddlepoint: throws std::domain_error
/// when x / n >= pi/4 = E[G].
double saddlepoint_numeric(double x, int n);

/// Large-n saddlepoint 2n / x.
double asymptotic_saddlepoint(double x, int n);

/// True when the asymptotic formulas are meaningful at s, i.e. s < 2n/e.
bool in_asymptotic_regime(double s, int n);

// The CDF and density approximations below return `valid = false` for
// s >= 2n/e. At s = 2n/e exactly the value is still computed (the gamma
// argument is zero); beyond it the value is NaN.

/// ln F_{H1}(s) ~ ln[ 2^n / (n^n sqrt(4 pi n)) Gamma(n+1, 2n(ln(2n/s) - 1)) ].
TailValue log_cdf_h1(double s, int n);

/// Leading-order form  4^n e^{-2n(l-1)} (l-1)^n / sqrt(4 pi n),  l = ln(2n/s).
TailValue log_cdf_h1_leading(double s, int n);

/// Finite-n rate function
///   J_n(s) = -ln 4 + 2(l-1) - ln(l-1) + ln(4 pi n)/(2n),  l = ln(2n/s),
/// identical to -log_cdf_h1_leading(s, n) / n. Throws outside s < 2n/e.
double rate_function(double s, int n);

/// ln F_{H2}(s) ~ ln[ 2^n sqrt(n) / (e^2 sqrt(pi) alpha_l (n+1)^{n+1})
///                    Gamma(n+1, 2(n+1)(ln(2n/s) - 1)) ].
TailValue log_cdf_h2(double s, int n, double alpha_l);

/// ln f_{H1}(x) ~ ln[ e^{2n} (ln(2n/x) - 1)^n / ((n/x)^{2n-1} sqrt(pi n)) ].
/// A log density, so not clamped to <= 0.
TailValue log_pdf_h1(double x, int n);

struct ErfcComparison {
    double exact;       // erfc(sqrt(alpha_l) n / x)
    double asymptotic;  // x e^{-alpha_l n^2/x^2} (1 - x^2/(2 alpha_l n^2)) / (sqrt(pi alpha_l) n)
    double log_ratio;   // ln(exact / asymptotic), stable when both underflow
};

/// Exact versus two-term asymptotic erfc at the direct-link saddlepoint.
ErfcComparison erfc_asymptotic_check(double x, int n, double alpha_l);

/// Asymptotic outage for either scenario (log_cdf_h1 or log_cdf_h2 at s).
TailValue saddlepoint_outage(const OutageQuery& q);

/// Leading-order outage; defined only without the direct link.
TailValue saddlepoint_leading_outage(const OutageQuery& q);

}  // namespace irs::saddlepoint
