#include "qkd/mathkit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qkd {

double binary_entropy(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw std::domain_error("binary_entropy: q outside [0,1]");
  if (q == 0.0 || q == 1.0) return 0.0;
  return -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
}

double inverse_normal_cdf(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("inverse_normal_cdf: p outside (0,1)");
  // Acklam's rational approximation, then one Halley refinement off erfc.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (p < plow) {
    const double u = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
        ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
  } else if (p <= 1.0 - plow) {
    const double u = p - 0.5;
    const double r = u * u;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * u /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double u = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
        ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
  }
  // Halley step: e = Phi(x) - p.
  const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
  x = x - u / (1.0 + x * u / 2.0);
  return x;
}

namespace {

// log pmf of Binomial(n, p) at k via lgamma.
double log_binom_pmf(std::uint64_t n, std::uint64_t k, double log_p, double log_q) {
  return std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
         std::lgamma(double(n - k) + 1.0) + double(k) * log_p + double(n - k) * log_q;
}

}  // namespace

double inv_binomial_cdf(double eps, std::uint64_t n, double p) {
  if (n < 1) throw std::invalid_argument("inv_binomial_cdf: n must be >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("inv_binomial_cdf: eps outside (0,1)");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("inv_binomial_cdf: p outside [0,1]");
  if (p == 0.0) return 0.0;          // all mass at k = 0
  if (p == 1.0) return double(n);    // all mass at k = n

  const double mean = double(n) * p;
  const double sd = std::sqrt(double(n) * p * (1.0 - p));

  if (n > 1000000) {
    const double k = std::ceil(mean - 0.5 + sd * inverse_normal_cdf(eps));
    return std::clamp(k, 0.0, double(n));
  }

  // Exact summation. Terms more than ~50 sigma below the mean contribute
  // less than the smallest subnormal to the CDF, so the scan may start there
  // unchanged; for extremely small eps fall back to a full scan.
  std::uint64_t k0 = 0;
  if (eps >= 1e-250 && mean - 50.0 * sd - 10.0 > 0.0) {
    k0 = std::uint64_t(mean - 50.0 * sd - 10.0);
  }
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  double cdf = 0.0;
  for (std::uint64_t k = k0; k <= n; ++k) {
    const double lp = log_binom_pmf(n, k, log_p, log_q);
    if (lp > -745.0) cdf += std::exp(lp);
    if (cdf >= eps) return double(k);
  }
  return double(n);  // accumulated rounding left cdf slightly below eps
}

double chernoff_delta_upper(double mean_star, double eps_pe) {
  if (mean_star < 0) throw std::invalid_argument("chernoff_delta_upper: negative mean");
  if (!(eps_pe > 0.0 && eps_pe < 1.0))
    throw std::invalid_argument("chernoff_delta_upper: eps_pe outside (0,1)");
  const double beta = -std::log(eps_pe);
  return (beta + std::sqrt(8.0 * beta * mean_star + beta * beta)) / 2.0;
}

double chernoff_upper(double mean_star, double eps_pe) {
  return mean_star + chernoff_delta_upper(mean_star, eps_pe);
}

double clamp_lambda(double lambda, double lambda_min) {
  return std::clamp(lambda, lambda_min, 1.0 - lambda_min);
}

double gamma_upper(double n, double k, double lambda, double eps) {
  if (n < 1.0 || k < 1.0) throw std::invalid_argument("gamma_upper: n, k must be >= 1");
  if (lambda * (1.0 - lambda) == 0.0)
    throw std::invalid_argument("gamma_upper: lambda*(1-lambda) is zero; clamp first");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("gamma_upper: eps outside (0,1)");
  const double nk = n + k;
  const double a_max = std::max(n, k);
  const double log_arg = nk / (2.0 * M_PI * n * k * lambda * (1.0 - lambda) * eps * eps);
  const double g = nk / (n * k) * std::log(log_arg);
  if (g <= 0.0) return 0.0;  // correction vanished; samples are enormous
  const double ag = a_max * g / nk;
  const double denom = 2.0 + 2.0 * a_max * a_max * g / (nk * nk);
  return ((1.0 - 2.0 * lambda) * ag + std::sqrt(ag * ag + 4.0 * lambda * (1.0 - lambda) * g)) /
         denom;
}

}  // namespace qkd
