#pragma once

#include <functional>

#include "qkd/params.hpp"

namespace qkd {

struct SiftedStats;

/// Inputs to the B92 finite secure-key-length bound for one block.
struct B92Input {
  double n_r = 0.0;       // received noisy key size N_R in the block
  double qber = 0.0;      // measured QBER of the block
  double q_factor = 1.0;  // measurement-incompatibility quality q
  SecurityParams security;
  double block_s = 1.0;   // block acquisition time, for per-second reporting
};

struct B92KeyResult {
  double leak_bits = 0.0;     // L_EC
  double hmin_bits = 0.0;     // min-entropy bound after error reconciliation
  double key_len_bits = 0.0;  // l, clamped at 0
  double skr_bps = 0.0;       // l / block_s
  bool feasible = false;      // false when the unclamped length was negative
  double eps_qkd = 0.0;       // eps_cor + 2*eps_bar + eps_pa
};

/// One-way error-reconciliation leak estimate for a block of n_r_x bits at
/// error rate qber, evaluated at correctness failure eps_cor. The binomial
/// quantile is taken at 1 - eps_cor; see the project notes on the two
/// possible quantile readings. Clamped at 0. Endpoints qber in {0,1} drop
/// the quantile term.
double leak_ec(double n_r_x, double qber, double eps_cor);

B92KeyResult key_length_b92(const B92Input& input);

/// Adapter used by the temporal-filter sweep: maps a cell's SiftedStats to a
/// per-second secure key rate with N_R scaled to the given block duration.
std::function<double(const SiftedStats&)> make_b92_skr(SecurityParams security,
                                                       double q_factor = 1.0,
                                                       double block_s = 1.0);

}  // namespace qkd
