#pragma once

#include "qkd/params.hpp"

namespace qkd {

struct AsymptoticResult {
  double rate_per_pulse = 0.0;  // S_inf, clamped at 0
  double rate_bps = 0.0;        // S_inf * R
  double delta = 0.0;           // non-multiphoton detection fraction
  double qber = 0.0;
  double p_clk = 0.0;
  bool feasible = false;
};

/// Asymptotic secure key rate S_inf = P_clk * [Delta*(1 - h(Q/Delta)) - h(Q)]
/// with Delta = (P_clk - P_m) / P_clk. The physically meaningful region is
/// Q/Delta <= 0.5; beyond it the entropy term drives the rate to the clamp.
AsymptoticResult asymptotic_rate(const ProtocolInstance& inst);

}  // namespace qkd
