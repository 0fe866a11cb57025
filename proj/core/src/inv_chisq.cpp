#include "deconv/inv_chisq.hpp"

#include <cmath>

#include "deconv/errors.hpp"
#include "deconv/special.hpp"

namespace deconv {

InvChiSq::InvChiSq(double nu_, double s_) : nu(nu_), s(s_) {
  if (!(nu > 0.0) || !(s > 0.0)) {
    throw DomainError("InvChiSq: requires nu > 0 and s > 0");
  }
}

double InvChiSq::log_density(double x) const {
  if (!(x > 0.0)) return -std::numeric_limits<double>::infinity();
  return 0.5 * nu * std::log(0.5 * s) - std::lgamma(0.5 * nu) -
         (0.5 * nu + 1.0) * std::log(x) - 0.5 * s / x;
}

double InvChiSq::density(double x) const {
  if (!(x > 0.0)) return 0.0;
  return std::exp(log_density(x));
}

double InvChiSq::cdf(double x) const {
  if (!(x > 0.0)) return 0.0;
  // X <= x  <=>  s / chisq_nu <= x  <=>  chisq_nu >= s / x.
  return 1.0 - gamma_p(0.5 * nu, 0.5 * s / x);
}

double InvChiSq::quantile(double p) const {
  if (!(p > 0.0) || !(p < 1.0)) throw DomainError("InvChiSq::quantile: p in (0,1)");
  return s / chi_squared_quantile(nu, 1.0 - p);
}

std::pair<double, double> InvChiSq::naturals() const {
  return {-0.5 * nu - 1.0, -0.5 * s};
}

InvChiSq InvChiSq::from_naturals(double eta1, double eta2) {
  const double nu = -2.0 * (1.0 + eta1);
  const double s = -2.0 * eta2;
  if (!(nu > 0.0) || !(s > 0.0)) {
    throw DomainError("InvChiSq::from_naturals: improper natural parameters");
  }
  return InvChiSq(nu, s);
}

double InvChiSq::mean_inv_from_naturals(double eta1, double eta2) {
  return (eta1 + 1.0) / eta2;
}

double InvChiSq::sample(std::mt19937_64& rng) const {
  std::gamma_distribution<double> gamma(0.5 * nu, 2.0);  // chisq(nu)
  double c = gamma(rng);
  while (c <= 0.0) c = gamma(rng);
  return s / c;
}

}  // namespace deconv
