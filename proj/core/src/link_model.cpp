#include "qkd/link_model.hpp"

#include <cmath>
#include <stdexcept>

namespace qkd {

double total_transmittance(const ProtocolInstance& inst) {
  return inst.source.eta_tran * inst.channel.eta_ch() * inst.receiver.eta_rec;
}

double signal_probability(const ProtocolInstance& inst) {
  return inst.source.mu_tran() * inst.eta_pre * inst.channel.eta_ch() * inst.receiver.eta_rec;
}

double p_click(const ProtocolInstance& inst) {
  const double s = signal_probability(inst);
  if (s > 1.0)
    throw std::invalid_argument("p_click: signal probability exceeds 1, not a valid probability");
  const double p = inst.receiver.p_dc + (1.0 - inst.receiver.p_dc) * s;
  return std::min(p, 1.0);
}

double p_multiphoton(const ProtocolInstance& inst) {
  const double mu = inst.source.mu_tran() * inst.eta_pre;
  return inst.source.g2_zero * mu * mu / 2.0;
}

double expected_qber(const ProtocolInstance& inst) {
  const double pclk = p_click(inst);
  if (pclk <= 0.0) throw std::invalid_argument("expected_qber: P_clk is zero");
  const double q = (inst.receiver.p_mis * signal_probability(inst) + inst.receiver.p_dc / 2.0) / pclk;
  return std::min(q, 0.5);
}

double p_error_bb84(const ProtocolInstance& inst) {
  const double p0 = std::exp(-inst.source.mu_tran() * inst.eta_pre);
  return p0 * inst.receiver.p_dc / 2.0 +
         (1.0 - inst.receiver.p_dc) * signal_probability(inst) * inst.receiver.p_mis;
}

}  // namespace qkd
