/**
 * @file quadrature.hpp
 * @brief Adaptive numerical integration plus digamma and Euler's constant.
 *
 * The integrator bisects with an embedded Gauss(7)/Kronrod(15) pair whose
 * nodes are strictly interior, so integrable endpoint singularities
 * (logarithmic ones in particular) are never sampled. The special-function
 * side reuses the exact Bernoulli numbers for the digamma asymptotic tail.
 */
#pragma once

#include "ynum/rational.hpp"

#include <functional>

namespace ynum {

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_depth = 60;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = true;
};

/// Integrates f over [a, b] (a <= b required). Endpoints are never evaluated.
/// Non-convergence at max_depth is reported via converged = false; an
/// integrand returning NaN is an error.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureConfig& cfg = {});

/// Variant selector for representations kept both in corrected and in
/// originally printed form.
enum class PrintedVariant { corrected, as_printed };

enum class HarmonicIntegralForm { geometric, log_left, log_right };

/// (-1)^n/(lambda-1)^(n+2) * integral_0^((lambda-1)/lambda) of sum_j x^j.
/// The (1-x^(n+1))/(1-x) integrand is evaluated as the polynomial, so the
/// removable singularity never reaches the sampler.
QuadratureResult y_integral_general(long long n, const Rational& lam,
                                    const QuadratureConfig& cfg = {});

/// Integral representation of y(n,1/2) over [0,1].
///   corrected:   -2^(n+2) * I_n  with I_n = integral (1+(-1)^n x^(n+1))/(1+x)
///   as_printed:  I_n / 2^(n+2)   (kept verbatim; off by the factor -2^(2n+4))
QuadratureResult y_half_integral(long long n, PrintedVariant variant,
                                 const QuadratureConfig& cfg = {});

/// H_n by one of three integral representations; n = 0 returns 0 directly.
QuadratureResult harmonic_integral(long long n, HarmonicIntegralForm form,
                                   const QuadratureConfig& cfg = {});

/// integral (1-x^[n/2])/(1-x) - integral (1-x^n)/(1-x), both over [0,1];
/// equals y(n,1/2)/2^(n+2) + (-1)^n/(n+1).
QuadratureResult y_half_integral_diff(long long n, const QuadratureConfig& cfg = {});

/// y(n,1/2) from the log-kernel harmonic representation:
/// 2^(n+2) (n J_n - [n/2] J_[n/2]) + (-1)^(n+1) 2^(n+2)/(n+1)
/// with J_m = integral_0^1 (1-x)^(m-1) ln x dx (terms with zero coefficient skipped).
QuadratureResult y_half_log_integral(long long n, const QuadratureConfig& cfg = {});

/// psi(x) for x > 0: upward recurrence past 10, then the asymptotic series
/// with exact Bernoulli coefficients truncated at B_14.
double digamma(double x);

/// Euler-Mascheroni constant, computed as H_N - ln N - 1/(2N) + tail at N = 10^4
/// with the exact H_N; agrees with euler_gamma_reference() to 1e-14.
double euler_gamma();

/// Stored 30-digit reference 0.577215664901532860606512090082, as a double.
double euler_gamma_reference();

/// Digamma form of y(n,1/2): 2^(n+2) ((-1)^(n+1)/(n+1) + H_[n/2] - gamma - psi(n+1)).
double y_half_digamma(long long n);

/// integral_0^1 (1-sqrt x)/(1-x) dx, evaluated as 1/(1+sqrt x); equals 2 - 2 ln 2.
QuadratureResult euler_f_half(const QuadratureConfig& cfg = {});

}  // namespace ynum
