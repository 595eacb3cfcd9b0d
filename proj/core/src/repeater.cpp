#include "qkd/repeater.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qkd/mathkit.hpp"
#include "qkd/rate_curve.hpp"

namespace qkd {

namespace {

constexpr double kLightSpeed = 3e8;  // m/s, free-space convention of the loss->distance map

struct Segment {
  double eta;  // per-attempt success probability
  double tau;  // attempt slot duration, seconds
};

Segment segment(const RepeaterParams& p, double loss_db) {
  Segment s;
  const double eta_single = p.eta_p * p.eta_c * p.eta_d * std::pow(10.0, -loss_db / 10.0);
  // m parallel memory pairs attempt per slot; only m = 1 is validated.
  s.eta = 1.0 - std::pow(1.0 - eta_single, double(p.m_pairs));
  const double distance_m = p.l_att_km * 1e3 * loss_db * std::log(10.0) / 10.0;
  s.tau = p.t_p + distance_m / kLightSpeed;
  return s;
}

}  // namespace

MaQkdRate ma_qkd_rate(const RepeaterParams& p, double total_loss_db, NodePlacement placement) {
  if (total_loss_db < 0) throw std::invalid_argument("ma_qkd_rate: negative loss");
  if (!(placement.frac_to_alice >= 0.0 && placement.frac_to_alice <= 1.0))
    throw std::invalid_argument("ma_qkd_rate: frac_to_alice outside [0,1]");
  if (p.t2_s <= 0 || p.t_p <= 0) throw std::invalid_argument("ma_qkd_rate: non-positive time");
  if (p.m_pairs < 1) throw std::invalid_argument("ma_qkd_rate: m_pairs must be >= 1");

  const Segment a = segment(p, total_loss_db * placement.frac_to_alice);
  const Segment b = segment(p, total_loss_db * (1.0 - placement.frac_to_alice));

  MaQkdRate r;
  if (a.eta <= 0.0 || b.eta <= 0.0) return r;

  // Alice's memory is loaded first and dephases for the N_B slots Bob's side
  // needs; N_B is geometric, so the mean coherence factor has a closed form.
  const double x = std::exp(-b.tau / p.t2_s);
  const double lambda_w = b.eta * x / (1.0 - (1.0 - b.eta) * x);

  r.e_z = p.e_ma + p.e_mb - 2.0 * p.e_ma * p.e_mb;
  r.e_x = 0.5 * (1.0 - p.lambda_bsm * lambda_w * (1.0 - 2.0 * p.e_ma) * (1.0 - 2.0 * p.e_mb));
  r.e_x = std::clamp(r.e_x, 0.0, 0.5);
  r.secret_fraction =
      std::max(0.0, 1.0 - binary_entropy(r.e_x) - p.f * binary_entropy(r.e_z));
  if (r.secret_fraction <= 0.0) return r;

  const double uses = 1.0 / a.eta + 1.0 / b.eta;
  const double time_s = a.tau / a.eta + b.tau / b.eta;
  r.per_use = p.eta_bsm * r.secret_fraction / uses;
  r.per_second = p.eta_bsm * r.secret_fraction / time_s;
  r.feasible = true;
  return r;
}

PlacementResult optimize_placement(const RepeaterParams& p, double total_loss_db) {
  auto rate_at = [&](double f) {
    return ma_qkd_rate(p, total_loss_db, NodePlacement{f}).per_use;
  };

  double best_f = 0.5;
  double best_r = rate_at(best_f);
  for (int i = 0; i <= 100; ++i) {
    const double f = double(i) / 100.0;
    const double r = rate_at(f);
    if (r > best_r) {
      best_r = r;
      best_f = f;
    }
  }

  // Golden-section refinement around the winning grid cell.
  double lo = std::max(0.0, best_f - 0.01);
  double hi = std::min(1.0, best_f + 0.01);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - gr * (hi - lo);
  double d = lo + gr * (hi - lo);
  double fc = rate_at(c);
  double fd = rate_at(d);
  while (hi - lo > 1e-4) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = rate_at(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = rate_at(d);
    }
  }
  const double f_opt = (rate_at(lo) >= rate_at(hi)) ? lo : hi;
  PlacementResult res;
  res.placement.frac_to_alice = (rate_at(f_opt) >= best_r) ? f_opt : best_f;
  res.rate = ma_qkd_rate(p, total_loss_db, res.placement);
  return res;
}

CrossoverReport crossover_with(const RateCurve& direct, const RepeaterParams& params) {
  CrossoverReport rep;
  for (std::size_t i = 0; i < direct.loss_grid_db.size(); ++i) {
    const double loss = direct.loss_grid_db[i];
    const double direct_bps = direct.rate_bps[i];
    const double rep_bps = optimize_placement(params, loss).rate.per_second;
    if (direct_bps > 0.0) rep.direct_limit_db = loss;
    if (rep_bps > 0.0) rep.repeater_limit_db = loss;
    if (!rep.crossover_db && rep_bps > direct_bps && rep_bps > 0.0) rep.crossover_db = loss;
  }
  return rep;
}

}  // namespace qkd
