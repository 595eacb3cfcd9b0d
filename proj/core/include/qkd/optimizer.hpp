#pragma once

#include <string>
#include <vector>

#include "qkd/params.hpp"
#include "qkd/rate_curve.hpp"

namespace qkd {

enum class Calculator {
  Bb84Asymptotic,  // p_x fixed at 1, only eta_tr optimized
  Bb84Finite,
};

Calculator calculator_from_name(const std::string& name);
std::string calculator_name(Calculator calc);

struct LossRange {
  double start_db = 0.0;
  double stop_db = 35.0;
  double step_db = 0.5;
  std::vector<double> grid() const;
};

struct OptimizerOptions {
  int grid_points = 60;        // log-grid points per axis for the coarse scan
  double rel_tol = 1e-4;       // relative rate tolerance of the refinement
  double eta_tr_min = 1e-4;
  std::vector<double> eta_tr_starts = {1.0, 0.1, 0.01};  // multi-start anchors
};

struct PointChoice {
  double rate_per_pulse = 0.0;
  double p_x = 1.0;
  double eta_tr = 1.0;
  bool feasible = false;
};

/// Coordinate descent over (p_x, eta_tr) at a fixed loss: log-grid scan plus
/// golden-section refinement per axis. Deterministic.
PointChoice optimize_point(Calculator calc, const ProtocolInstance& inst, double loss_db,
                           const OptimizerOptions& opts = {});

/// Rate at fixed (p_x, eta_tr) from the instance, no optimization.
double point_rate(Calculator calc, const ProtocolInstance& inst);

RateCurve build_curve(Calculator calc, const ProtocolInstance& inst, const LossRange& range = {},
                      const OptimizerOptions& opts = {});

}  // namespace qkd
