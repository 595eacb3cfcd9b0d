#include "qkd/b92.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qkd/mathkit.hpp"
#include "qkd/timetag.hpp"

namespace qkd {

double leak_ec(double n_r_x, double qber, double eps_cor) {
  if (n_r_x < 1.0) throw std::invalid_argument("leak_ec: n_r_x must be >= 1");
  if (!(eps_cor > 0.0 && eps_cor < 1.0))
    throw std::invalid_argument("leak_ec: eps_cor outside (0,1)");
  if (!(qber >= 0.0 && qber <= 1.0)) throw std::invalid_argument("leak_ec: qber outside [0,1]");

  const double n = n_r_x;
  const double tail = -0.5 * std::log2(n) - std::log2(1.0 / eps_cor);
  if (qber == 0.0 || qber == 1.0) {
    // Endpoint convention: the quantile term is singular and dropped.
    return std::max(0.0, tail);
  }
  double quantile_term = 0.0;
  if (qber != 0.5) {
    const auto n_int = std::uint64_t(std::llround(n));
    const double f_inv = inv_binomial_cdf(1.0 - eps_cor, std::max<std::uint64_t>(1, n_int),
                                          1.0 - qber);
    quantile_term = (n * (1.0 - qber) - f_inv) * std::log2((1.0 - qber) / qber);
  }
  const double leak = n * binary_entropy(qber) + quantile_term + tail;
  return std::max(0.0, leak);
}

B92KeyResult key_length_b92(const B92Input& input) {
  if (input.n_r < 1.0) {
    B92KeyResult empty;
    empty.eps_qkd = input.security.eps_cor + 2.0 * input.security.eps_bar + input.security.eps_pa;
    return empty;
  }
  if (!(input.q_factor > 0.0 && input.q_factor <= 1.0))
    throw std::invalid_argument("key_length_b92: q_factor outside (0,1]");

  const SecurityParams& sec = input.security;
  B92KeyResult res;
  res.leak_bits = leak_ec(input.n_r, input.qber, sec.eps_cor);
  const double uncertainty = input.n_r * binary_entropy(input.qber);
  res.hmin_bits = input.n_r * input.q_factor - uncertainty - res.leak_bits -
                  std::log2(2.0 / sec.eps_cor);
  const double len = res.hmin_bits - 2.0 * std::log2(1.0 / (2.0 * sec.eps_pa));
  res.feasible = len > 0.0;
  res.key_len_bits = std::min(std::max(len, 0.0), input.n_r);
  res.skr_bps = res.key_len_bits / input.block_s;
  res.eps_qkd = sec.eps_cor + 2.0 * sec.eps_bar + sec.eps_pa;
  return res;
}

std::function<double(const SiftedStats&)> make_b92_skr(SecurityParams security, double q_factor,
                                                       double block_s) {
  return [security, q_factor, block_s](const SiftedStats& stats) {
    B92Input in;
    in.n_r = std::floor(stats.sikr_bps * block_s);
    in.qber = stats.qber;
    in.q_factor = q_factor;
    in.security = security;
    in.block_s = block_s;
    if (in.n_r < 1.0) return 0.0;
    return key_length_b92(in).skr_bps;
  };
}

}  // namespace qkd
