#pragma once

#include <stdexcept>

namespace irs {

/// Raised when an iterative numerical routine exhausts its budget.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace laplace {

/// E[exp(-t G)] for the per-element cascaded gain G = |h1||h2| with density
/// 4x K0(2x). With t = 2 cos(theta) the closed form reads
///   (sin theta - theta cos theta) / sin^3 theta,
/// which for t > 2 (theta = i phi) becomes the real expression
///   (phi cosh phi - sinh phi) / sinh^3 phi,  phi = arcosh(t/2).
/// Near t = 2 a power series in theta^2 removes the 0/0. Domain t > 0.
double laplace_g(double t);

/// d/dt laplace_g(t), analytic on the same branch structure. Always < 0.
double laplace_g_derivative(double t);

/// -L_G'(t) / L_G(t): the mean of G under the exponentially tilted law.
/// Decreases from pi/4 at t -> 0+ to ~2/t as t -> infinity.
double tilted_mean_g(double t);

/// E[exp(-t D)] for the direct-link gain D = sqrt(alpha_l) |h_L|, i.e.
///   1 - sqrt(pi alpha_l)/2 t e^{alpha_l t^2/4} erfc(sqrt(alpha_l) t / 2).
/// Evaluated through erfcx (small argument) or the Mills-ratio continued
/// fraction (large argument) so that neither the exponential overflows nor
/// the leading 1 cancels. Domain t > 0, alpha_l > 0.
double laplace_d(double t, double alpha_l);

/// d/dt laplace_d(t, alpha_l).
double laplace_d_derivative(double t, double alpha_l);

/// Adaptive quadrature (tanh-sinh on [0,1], Gauss-Kronrod beyond) of int_0^inf 4x K0(2x) e^{-tx} dx to
/// absolute tolerance 1e-11. Independent of the closed form above; kept for
/// validation. Throws ConvergenceError if the tolerance is not reached.
double quadrature_oracle_g(double t);

}  // namespace laplace
}  // namespace irs
