#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qkd {

/// Secure key rate versus channel loss, with the optimizer's choices at each
/// point. CSV columns (stable order): loss_db, distance_km, rate_per_pulse,
/// rate_bps, p_x_opt, eta_tr_opt, feasible.
struct RateCurve {
  std::vector<double> loss_grid_db;
  std::vector<double> distance_km;
  std::vector<double> rate_per_pulse;  // per pulse (point-to-point) or per use (repeater)
  std::vector<double> rate_bps;
  std::vector<double> p_x_opt;         // placement fraction for repeater curves
  std::vector<double> eta_tr_opt;
  std::vector<std::uint8_t> feasible;

  struct Meta {
    std::string calculator;
    std::string preset;
    double t_s = 0.0;
  } meta;

  std::size_t size() const { return loss_grid_db.size(); }
  /// Largest loss with a positive rate, or a negative value when none.
  double max_tolerable_loss_db() const;
};

std::string curve_to_csv(const RateCurve& curve);
RateCurve curve_from_csv(const std::string& text);

void write_curve_csv(const RateCurve& curve, const std::string& path);
RateCurve read_curve_csv(const std::string& path);

}  // namespace qkd
