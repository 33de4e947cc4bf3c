#pragma once

#include <span>

#include "irs/log_prob.hpp"

namespace irs::specfun {

/// Modified Bessel function of the second kind, order zero.
/// Power series with the logarithmic term for x <= 2, Steed's continued
/// fraction (Temme's CF2) above. Throws std::domain_error for x <= 0.
double bessel_k0(double x);

/// Complementary error function, total on the finite reals.
double erfc(double x);

/// Scaled complementary error function e^{x^2} erfc(x). Never overflows for
/// x >= 0; decays like 1/(x sqrt(pi)).
double erfcx(double x);

/// Tail of Laplace's continued fraction for the Mills ratio:
///   a_k / (x + a_{k+1} / (x + a_{k+2} / (x + ...))),  a_j = j / 2,
/// so that sqrt(pi) erfcx(x) = 1 / (x + erfc_cf_tail(1, x)). All partial
/// quotients are positive, which makes it the cancellation-free way to get
/// 1 - sqrt(pi) x erfcx(x) for large x. Intended for x >= 2.
double erfc_cf_tail(int first, double x);

/// ln erfc(x), accurate deep into the right tail where erfc underflows.
double log_erfc(double x);

/// ln Gamma(n + 1, a) for integer n >= 0 and a >= 0, via the finite sum
///   Gamma(n + 1, a) = n! e^{-a} sum_{k=0}^{n} a^k / k!
/// assembled with log-sum-exp. Throws std::domain_error for n < 0 or a < 0.
double log_upper_gamma_int(int n, double a);

/// ln sum_i exp(terms[i]). Max-shifted; -inf entries are absorbing.
/// Throws std::invalid_argument on an empty sequence.
double log_sum_exp(std::span<const double> terms);

/// ln(e^a + e^b).
double log_add_exp(double a, double b);

/// ln(e^a - e^b) for a >= b. Returns -inf when a == b.
double log_diff_exp(double a, double b);

}  // namespace irs::specfun
