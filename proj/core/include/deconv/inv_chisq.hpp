#pragma once

#include <random>
#include <utility>

namespace deconv {

/// Scaled inverse chi-squared distribution, pinned project-wide as
///   InvChiSq(nu, s):  p(x) = (s/2)^{nu/2} / Gamma(nu/2) * x^{-nu/2-1} exp(-s/(2x))
/// for x > 0, so that 1/x ~ Gamma(shape nu/2, rate s/2) and E(1/x) = nu/s.
///
/// The natural-parameter coordinates use the sufficient statistic
/// T(x) = (log x, 1/x), giving eta = (-nu/2 - 1, -s/2).
struct InvChiSq {
  double nu;
  double s;

  InvChiSq(double nu_, double s_);

  double log_density(double x) const;
  double density(double x) const;

  /// E(1/X) = nu / s.
  double mean_inv() const { return nu / s; }

  /// P(X <= x).
  double cdf(double x) const;
  /// Quantile function: x with P(X <= x) = p.
  double quantile(double p) const;

  /// Natural parameters (eta1, eta2) under T(x) = (log x, 1/x).
  std::pair<double, double> naturals() const;
  /// Recover (nu, s) from natural parameters; requires eta1 < -1, eta2 < 0.
  static InvChiSq from_naturals(double eta1, double eta2);

  /// Moment rule on natural parameters: E(1/X) = (eta1 + 1) / eta2.
  static double mean_inv_from_naturals(double eta1, double eta2);

  /// Draw a sample as s / chisq(nu).
  double sample(std::mt19937_64& rng) const;
};

}  // namespace deconv
