#pragma once

#include <optional>

namespace qkd {

struct RateCurve;

/// Single-node memory-assisted link, two quantum memories at a central
/// station loaded sequentially (Alice's side first, then Bob's), followed by
/// a Bell-state measurement on the memories.
struct RepeaterParams {
  double eta_p = 0.7;       // entangled-state preparation efficiency
  double t_p = 1e-6;        // preparation time per attempt, seconds
  double eta_c = 0.7;       // fiber coupling + frequency conversion
  double eta_d = 0.7;       // detection efficiency at the users
  double lambda_bsm = 1.0;  // BSM ideality
  double eta_bsm = 0.175;   // BSM success probability
  double f = 1.16;          // error-correction inefficiency
  double e_ma = 1e-2;       // misalignment, Alice side
  double e_mb = 1e-2;       // misalignment, Bob side
  double t2_s = 10e-3;      // memory dephasing time T2
  double l_att_km = 22.0;   // fiber attenuation length
  int m_pairs = 1;          // memory pairs per side; only m = 1 is validated
};

struct NodePlacement {
  double frac_to_alice = 0.5;  // fraction of the total loss on the Alice segment
};

struct MaQkdRate {
  double per_use = 0.0;     // key bits per attempt slot
  double per_second = 0.0;  // key bits per second
  double e_x = 0.0;         // phase error rate (dephasing + misalignment)
  double e_z = 0.0;         // bit error rate (misalignment)
  double secret_fraction = 0.0;
  bool feasible = false;
};

MaQkdRate ma_qkd_rate(const RepeaterParams& params, double total_loss_db,
                      NodePlacement placement);

struct PlacementResult {
  NodePlacement placement;
  MaQkdRate rate;
};

/// Golden-section maximization of the per-use rate over frac_to_alice, after
/// a 101-point pre-scan (the surface is unimodal in practice).
PlacementResult optimize_placement(const RepeaterParams& params, double total_loss_db);

struct CrossoverReport {
  std::optional<double> crossover_db;        // first loss where repeater wins
  std::optional<double> direct_limit_db;     // largest loss with positive direct rate
  std::optional<double> repeater_limit_db;   // largest loss with positive repeater rate
};

/// Compare the repeater (optimized placement) against a point-to-point rate
/// curve on the curve's own loss grid, in bits per second.
CrossoverReport crossover_with(const RateCurve& direct, const RepeaterParams& params);

}  // namespace qkd
