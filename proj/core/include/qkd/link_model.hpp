#pragma once

#include "qkd/params.hpp"

namespace qkd {

// Elementary per-pulse detection and error probabilities shared by every
// key-rate calculator. All pure functions of an immutable instance.

/// End-to-end optical transmittance eta_tran * eta_ch * eta_rec (the
/// efficiency seen by a photon collected at the objective).
double total_transmittance(const ProtocolInstance& inst);

/// Probability that a signal photon produces a click at Bob:
/// mu_tran * eta_tr * eta_ch * eta_rec  ==  mu_sps * eta_tr * T.
double signal_probability(const ProtocolInstance& inst);

/// Total detection probability P_clk = P_dc + (1 - P_dc) * signal.
/// Throws std::invalid_argument when the signal term exceeds 1.
double p_click(const ProtocolInstance& inst);

/// Multi-photon emission bound P_m <= g2(0) * (mu_tran * eta_tr)^2 / 2.
double p_multiphoton(const ProtocolInstance& inst);

/// Expected QBER Q = (P_mis * signal + P_dc/2) / P_clk.
/// Throws std::invalid_argument when P_clk == 0.
double expected_qber(const ProtocolInstance& inst);

/// Per-pulse error probability for the BB84 error counts:
/// P_err = P0 * P_dc / 2 + (1 - P_dc) * signal * P_mis, with P0 the
/// vacuum-emission probability exp(-mu_tran * eta_tr).
double p_error_bb84(const ProtocolInstance& inst);

}  // namespace qkd
