#pragma once

#include <cstdint>

namespace qkd {

/// Binary Shannon entropy in bits, h(0) = h(1) = 0.
/// Throws std::domain_error outside [0,1].
double binary_entropy(double q);

/// Inverse of the standard normal CDF.
double inverse_normal_cdf(double p);

/// Smallest integer k with CDF_Binomial(n, p)(k) >= eps, returned as double.
/// Exact summation for n <= 1e6, normal approximation with continuity
/// correction above (switchover validated against exact summation).
double inv_binomial_cdf(double eps, std::uint64_t n, double p);

/// Multiplicative-Chernoff deviation term
/// Delta^U = (beta + sqrt(8*beta*mean_star + beta^2)) / 2, beta = -ln(eps_pe).
double chernoff_delta_upper(double mean_star, double eps_pe);

/// Upper bound mean_star + Delta^U on a count with expectation mean_star.
double chernoff_upper(double mean_star, double eps_pe);

/// Statistical inflation of an observed ratio lambda on samples (n, k) to its
/// worst-case value at failure probability eps. Symmetric in n and k.
/// Throws std::invalid_argument when lambda*(1-lambda) == 0; callers clamp
/// lambda into [lambda_min, 1-lambda_min] first (default 1e-12).
double gamma_upper(double n, double k, double lambda, double eps);

inline constexpr double kLambdaMin = 1e-12;

/// Clamp helper for gamma_upper's lambda argument.
double clamp_lambda(double lambda, double lambda_min = kLambdaMin);

}  // namespace qkd
