#pragma once

#include <functional>

namespace deconv {

/// Exponential integral E1(x) = int_x^inf exp(-t)/t dt for x > 0.
/// Power series for x <= 1, modified Lentz continued fraction for x > 1;
/// relative accuracy around 1e-12 over the full double range.
double exp_integral_e1(double x);

/// exp(x) * E1(x), evaluated without forming exp(x).  Stays finite for
/// arguments far beyond the overflow point of exp, which the Horseshoe
/// update needs (zeta can exceed 1e6).
double exp_e1_scaled(double x);

/// Ratio of parabolic cylinder functions R_nu(x) = D_{-nu-2}(x) / D_{-nu-1}(x)
/// for nu > 0, x > 0, computed from the integral representation
///   D_{-a}(x) = exp(-x^2/4)/Gamma(a) * int_0^inf t^{a-1} exp(-t^2/2 - x t) dt
/// with adaptive quadrature on each factor (peak-normalized in log space).
double parabolic_cylinder_ratio(double nu, double x);

/// Adaptive Gauss-Kronrod 15(7) integration of f over [a, b].
double adaptive_integrate(const std::function<double(double)>& f, double a,
                          double b, double rel_tol = 1e-11,
                          double abs_tol = 1e-300);

/// log of int_0^inf t^p exp(-t^2/2 - x t) dt, p >= 0, x >= 0.
double log_power_gauss_integral(double p, double x);

/// Standard normal CDF and its inverse.
double normal_cdf(double x);
double normal_quantile(double p);

/// Regularized lower incomplete gamma P(a, x) and its inverse in x.
double gamma_p(double a, double x);
double gamma_p_inv(double a, double p);

/// Quantile of the chi-squared distribution with nu degrees of freedom.
double chi_squared_quantile(double nu, double p);

}  // namespace deconv
