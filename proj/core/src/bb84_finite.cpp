#include "qkd/bb84_finite.hpp"

#include <algorithm>
#include <cmath>

#include "qkd/b92.hpp"
#include "qkd/link_model.hpp"
#include "qkd/mathkit.hpp"

namespace qkd {

BB84Counts expected_counts(const ProtocolInstance& inst, const BB84Options& opts) {
  const double pclk = p_click(inst);
  const double perr = p_error_bb84(inst);
  const double pm = p_multiphoton(inst);
  const double px2 = inst.p_x * inst.p_x;
  const double pz2 = inst.p_z() * inst.p_z();

  BB84Counts c;
  c.n_s = inst.n_sent();
  auto shape = [&](double v) { return opts.floor_counts ? std::floor(v) : v; };
  c.n_r_x = shape(c.n_s * px2 * pclk);
  c.n_r_z = shape(c.n_s * pz2 * pclk);
  c.m_x = shape(c.n_s * px2 * perr);
  c.m_z = shape(c.n_s * pz2 * perr);
  c.qber = pclk > 0.0 ? perr / pclk : 0.0;

  const double eps_pe = inst.security.eps_pe;
  c.n_mp_x = chernoff_upper(c.n_s * px2 * pm, eps_pe);
  c.n_mp_z = chernoff_upper(c.n_s * pz2 * pm, eps_pe);
  c.n_nmp_x = c.n_r_x - c.n_mp_x;
  c.n_nmp_z = c.n_r_z - c.n_mp_z;
  if (c.n_nmp_x <= 0.0 || c.n_nmp_z <= 0.0 || c.n_r_x < 1.0 || c.n_r_z < 1.0) {
    c.feasible = false;
    return c;
  }
  c.phi_x = c.m_z / c.n_nmp_z;
  if (c.phi_x < 1.0) {
    c.phi_x_bar = c.phi_x + gamma_upper(c.n_r_z, c.n_r_x, clamp_lambda(c.phi_x),
                                        inst.security.eps_pa);
  } else {
    c.phi_x_bar = 1.0;
  }
  c.feasible = true;
  return c;
}

double key_length_bb84(const BB84Counts& counts, double qber, const SecurityParams& security,
                       const BB84Options& opts) {
  if (!counts.feasible) return 0.0;
  if (counts.phi_x_bar >= 0.5) return 0.0;

  double leak;
  if (opts.leak == LeakModel::InefficiencyFactor) {
    leak = security.f_ec * counts.n_r_x * binary_entropy(std::min(qber, 0.5));
  } else {
    leak = leak_ec(std::max(1.0, counts.n_r_x), std::min(qber, 0.5), security.eps_cor);
  }
  const double len = counts.n_nmp_x * (1.0 - binary_entropy(counts.phi_x_bar)) - leak -
                     2.0 * std::log2(1.0 / (2.0 * security.eps_pa)) -
                     std::log2(2.0 / security.eps_cor);
  return std::max(0.0, len);
}

double bb84_finite_rate(const ProtocolInstance& inst, const BB84Options& opts) {
  const BB84Counts counts = expected_counts(inst, opts);
  if (!counts.feasible) return 0.0;
  const double len = key_length_bb84(counts, counts.qber, inst.security, opts);
  return len / counts.n_s;
}

}  // namespace qkd
