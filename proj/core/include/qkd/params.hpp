#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qkd {

/// Emitter and Alice-side optics, per preset parameter table.
struct SourceParams {
  double clock_rate_hz = 40e6;  // pulse / excitation rate R
  double mu_sps = 0.052;        // mean photon number at collection (objective output)
  double eta_tran = 0.252;      // Alice optics transmission, collection -> channel input
  double g2_zero = 0.24;        // second-order correlation at zero delay
  double lifetime_ns = 4.58;    // emitter decay time tau

  // Mean photon number entering the quantum channel.
  double mu_tran() const { return mu_sps * eta_tran; }
};

struct ChannelParams {
  double loss_db = 0.0;
  double att_length_km = 22.0;  // fiber attenuation length L_att
  double db_per_km = 0.2;       // fiber loss coefficient

  double eta_ch() const;        // 10^(-loss_db/10)
  double distance_km() const { return loss_db / db_per_km; }
};

struct ReceiverParams {
  double eta_rec = 0.42;  // Bob optics + detector efficiency
  double p_dc = 8e-7;     // dark-count probability per pulse per detector
  double p_mis = 0.0176;  // misalignment probability
};

/// Failure-probability budget for the finite-key bounds.
struct SecurityParams {
  double eps = 1e-10;      // base failure probability
  double eps_pa = 1e-10;   // privacy amplification
  double eps_bar = 1.5625e-22;  // smoothing, (eps/8)^2
  double eps_cor = 1e-10;  // correctness
  double eps_ec = 1e-10;   // error reconciliation
  double eps_pe = 4e-10;   // parameter estimation
  double f_ec = 1.16;      // reconciliation inefficiency

  // Derive the dependent epsilons from a base failure probability.
  static SecurityParams from_base(double eps_base);
  // BB84 analyses fix eps_cor = 1e-15; everything else as from_base.
  SecurityParams for_bb84() const;
};

/// One fully-specified protocol configuration: source, link, receiver,
/// security budget, plus the knobs the optimizer owns.
struct ProtocolInstance {
  SourceParams source;
  ChannelParams channel;
  ReceiverParams receiver;
  SecurityParams security;
  double p_x = 0.5;     // key-basis bias (BB84)
  double eta_pre = 1.0; // Alice pre-attenuation transmissivity eta_tr
  double t_s = 1.0;     // acquisition time, seconds

  double p_z() const { return 1.0 - p_x; }
  double n_sent() const { return source.clock_rate_hz * t_s; }

  // Throws std::invalid_argument on hard violations; returns soft warnings
  // (e.g. suspiciously large dark-count probability).
  std::vector<std::string> validate() const;
};

// Named presets, shipped with the repo: "baseline", "improved", "qd".
ProtocolInstance preset(std::string_view name);
std::vector<std::string> preset_names();

// JSON (de)serialization. Documents use snake_case keys mirroring the field
// names; mu_tran may be given instead of (or alongside) mu_sps + eta_tran.
ProtocolInstance instance_from_json_text(const std::string& text);
std::string instance_to_json_text(const ProtocolInstance& inst);
ProtocolInstance load_instance(const std::string& path);

// Apply "key=value" overrides (same keys as the JSON document).
void apply_override(ProtocolInstance& inst, const std::string& key, const std::string& value);

}  // namespace qkd
