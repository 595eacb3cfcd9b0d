#include "qkd/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qkd/bb84_asymptotic.hpp"
#include "qkd/bb84_finite.hpp"
#include "qkd/parallel.hpp"

namespace qkd {

Calculator calculator_from_name(const std::string& name) {
  if (name == "bb84-asymptotic") return Calculator::Bb84Asymptotic;
  if (name == "bb84-finite") return Calculator::Bb84Finite;
  throw std::invalid_argument("unknown calculator: " + name);
}

std::string calculator_name(Calculator calc) {
  switch (calc) {
    case Calculator::Bb84Asymptotic: return "bb84-asymptotic";
    case Calculator::Bb84Finite: return "bb84-finite";
  }
  return "?";
}

std::vector<double> LossRange::grid() const {
  if (step_db <= 0 || stop_db < start_db)
    throw std::invalid_argument("LossRange: need step > 0 and stop >= start");
  std::vector<double> g;
  const auto n = std::size_t(std::floor((stop_db - start_db) / step_db + 1e-9));
  g.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) g.push_back(start_db + double(i) * step_db);
  return g;
}

double point_rate(Calculator calc, const ProtocolInstance& inst) {
  switch (calc) {
    case Calculator::Bb84Asymptotic: return asymptotic_rate(inst).rate_per_pulse;
    case Calculator::Bb84Finite: return bb84_finite_rate(inst);
  }
  return 0.0;
}

namespace {

double golden_max(const std::function<double(double)>& f, double lo, double hi, double rel_tol) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - gr * (hi - lo);
  double d = lo + gr * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < 200 && (hi - lo) > rel_tol * std::max(1e-12, std::abs(hi) + std::abs(lo));
       ++i) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = f(d);
    }
  }
  return (f(lo) >= f(hi)) ? lo : hi;
}

}  // namespace

PointChoice optimize_point(Calculator calc, const ProtocolInstance& base, double loss_db,
                           const OptimizerOptions& opts) {
  ProtocolInstance inst = base;
  inst.channel.loss_db = loss_db;

  auto rate_at = [&](double p_x, double eta_tr) {
    ProtocolInstance probe = inst;
    probe.p_x = std::clamp(p_x, 1e-6, 1.0 - 1e-6);
    probe.eta_pre = std::clamp(eta_tr, opts.eta_tr_min, 1.0);
    return point_rate(calc, probe);
  };

  const bool optimize_px = calc == Calculator::Bb84Finite;
  // Asymptotic limit: every detection feeds the key, p_x -> 1.
  const double fixed_px = 1.0 - 1e-9;

  // log grids: eta_tr in [eta_tr_min, 1]; p_x approaches 1 geometrically.
  std::vector<double> eta_grid, px_grid;
  for (int i = 0; i < opts.grid_points; ++i) {
    const double t = double(i) / double(opts.grid_points - 1);
    eta_grid.push_back(std::pow(10.0, std::log10(opts.eta_tr_min) * (1.0 - t)));
    px_grid.push_back(1.0 - 0.5 * std::pow(10.0, -3.5 * t));  // 0.5 .. 1-1.6e-4
  }

  PointChoice best;
  best.p_x = optimize_px ? 0.5 : 1.0;
  best.eta_tr = 1.0;

  for (double eta_start : opts.eta_tr_starts) {
    double cur_eta = eta_start;
    double cur_px = optimize_px ? 0.5 : fixed_px;
    double cur_rate = rate_at(cur_px, cur_eta);

    // coarse joint scan seeded near this start
    for (double e : eta_grid) {
      if (optimize_px) {
        for (double p : px_grid) {
          const double r = rate_at(p, e);
          if (r > cur_rate) {
            cur_rate = r;
            cur_px = p;
            cur_eta = e;
          }
        }
      } else {
        const double r = rate_at(fixed_px, e);
        if (r > cur_rate) {
          cur_rate = r;
          cur_eta = e;
        }
      }
    }

    // coordinate descent with golden refinement
    for (int sweep = 0; sweep < 20; ++sweep) {
      const double before = cur_rate;
      cur_eta = golden_max([&](double e) { return rate_at(cur_px, e); },
                           std::max(opts.eta_tr_min, cur_eta / 4.0), std::min(1.0, cur_eta * 4.0),
                           1e-6);
      cur_rate = rate_at(cur_px, cur_eta);
      if (optimize_px) {
        const double lo = std::max(0.5, cur_px - 0.2);
        const double hi = std::min(1.0 - 1e-6, cur_px + 0.2);
        cur_px = golden_max([&](double p) { return rate_at(p, cur_eta); }, lo, hi, 1e-6);
        cur_rate = rate_at(cur_px, cur_eta);
      }
      if (cur_rate <= before * (1.0 + opts.rel_tol)) break;
    }

    if (cur_rate > best.rate_per_pulse) {
      best.rate_per_pulse = cur_rate;
      best.p_x = optimize_px ? cur_px : 1.0;
      best.eta_tr = cur_eta;
      best.feasible = cur_rate > 0.0;
    }
  }
  if (!best.feasible) {
    best.rate_per_pulse = 0.0;
  }
  return best;
}

RateCurve build_curve(Calculator calc, const ProtocolInstance& inst, const LossRange& range,
                      const OptimizerOptions& opts) {
  const std::vector<double> grid = range.grid();
  RateCurve curve;
  curve.loss_grid_db = grid;
  const std::size_t n = grid.size();
  curve.distance_km.resize(n);
  curve.rate_per_pulse.resize(n);
  curve.rate_bps.resize(n);
  curve.p_x_opt.resize(n);
  curve.eta_tr_opt.resize(n);
  curve.feasible.resize(n);
  curve.meta.calculator = calculator_name(calc);
  curve.meta.t_s = inst.t_s;

  parallel_for(n, [&](std::size_t i) {
    const PointChoice choice = optimize_point(calc, inst, grid[i], opts);
    curve.distance_km[i] = grid[i] / inst.channel.db_per_km;
    curve.rate_per_pulse[i] = choice.rate_per_pulse;
    curve.rate_bps[i] = choice.rate_per_pulse * inst.source.clock_rate_hz;
    curve.p_x_opt[i] = choice.p_x;
    curve.eta_tr_opt[i] = choice.eta_tr;
    curve.feasible[i] = choice.feasible ? 1 : 0;
  });
  return curve;
}

}  // namespace qkd
