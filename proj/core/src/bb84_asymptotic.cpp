#include "qkd/bb84_asymptotic.hpp"

#include <algorithm>

#include "qkd/link_model.hpp"
#include "qkd/mathkit.hpp"

namespace qkd {

AsymptoticResult asymptotic_rate(const ProtocolInstance& inst) {
  AsymptoticResult res;
  res.p_clk = p_click(inst);
  if (res.p_clk <= 0.0) return res;
  res.qber = expected_qber(inst);
  res.delta = (res.p_clk - p_multiphoton(inst)) / res.p_clk;
  if (res.delta <= 0.0) return res;

  const double arg = res.qber / res.delta;
  if (arg > 1.0) return res;
  const double s = res.p_clk * (res.delta * (1.0 - binary_entropy(arg)) - binary_entropy(res.qber));
  res.feasible = s > 0.0;
  res.rate_per_pulse = std::max(0.0, s);
  res.rate_bps = res.rate_per_pulse * inst.source.clock_rate_hz;
  return res;
}

}  // namespace qkd
