#pragma once

#include "qkd/params.hpp"

namespace qkd {

/// Expected detection/error statistics of a finite BB84 block, with the
/// multi-photon population bounded by the Chernoff tail and the phase error
/// rate inflated to its worst case.
struct BB84Counts {
  double n_s = 0.0;       // sent signals N_S = R * t_s
  double n_r_x = 0.0;     // received, key basis
  double n_r_z = 0.0;     // received, parameter-estimation basis
  double m_x = 0.0;       // errors, key basis
  double m_z = 0.0;       // errors, parameter-estimation basis
  double n_mp_x = 0.0;    // Chernoff upper bound on received multi-photon events
  double n_mp_z = 0.0;
  double n_nmp_x = 0.0;   // lower-bounded non-multiphoton received counts
  double n_nmp_z = 0.0;
  double phi_x = 0.0;     // phase error rate m_Z / n_nmp_Z
  double phi_x_bar = 0.0; // inflated phase error rate
  double qber = 0.0;      // per-detection error probability P_err / P_clk
  bool feasible = false;  // false when the multi-photon bound swallows a basis
};

enum class LeakModel {
  InefficiencyFactor,  // f_EC * N_R^X * h(Q)
  FiniteOneWay,        // one-way reconciliation bound (leak_ec)
};

struct BB84Options {
  LeakModel leak = LeakModel::InefficiencyFactor;
  bool floor_counts = false;  // round expectations down for conservative reporting
};

BB84Counts expected_counts(const ProtocolInstance& inst, const BB84Options& opts = {});

/// Finite secure key length; 0 with feasible=false propagated through the
/// returned value for infeasible counts. Uses eps_cor from `security`.
double key_length_bb84(const BB84Counts& counts, double qber, const SecurityParams& security,
                       const BB84Options& opts = {});

/// Convenience: key length per sent pulse for the given instance.
double bb84_finite_rate(const ProtocolInstance& inst, const BB84Options& opts = {});

}  // namespace qkd
