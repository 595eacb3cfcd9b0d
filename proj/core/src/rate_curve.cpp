#include "qkd/rate_curve.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qkd {

double RateCurve::max_tolerable_loss_db() const {
  double last = -1.0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (rate_per_pulse[i] > 0.0) last = loss_grid_db[i];
  }
  return last;
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string curve_to_csv(const RateCurve& curve) {
  std::string out = "loss_db,distance_km,rate_per_pulse,rate_bps,p_x_opt,eta_tr_opt,feasible\n";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    out += fmt(curve.loss_grid_db[i]);
    out += ',';
    out += fmt(curve.distance_km[i]);
    out += ',';
    out += fmt(curve.rate_per_pulse[i]);
    out += ',';
    out += fmt(curve.rate_bps[i]);
    out += ',';
    out += fmt(curve.p_x_opt[i]);
    out += ',';
    out += fmt(curve.eta_tr_opt[i]);
    out += ',';
    out += curve.feasible[i] ? '1' : '0';
    out += '\n';
  }
  return out;
}

RateCurve curve_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("curve_from_csv: empty input");
  if (line.rfind("loss_db,", 0) != 0)
    throw std::runtime_error("curve_from_csv: missing header row");
  RateCurve c;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    double loss, dist, rpp, bps, px, eta;
    int feas;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf,%lf,%d", &loss, &dist, &rpp, &bps, &px,
                    &eta, &feas) != 7)
      throw std::runtime_error("curve_from_csv: malformed row at line " + std::to_string(lineno));
    c.loss_grid_db.push_back(loss);
    c.distance_km.push_back(dist);
    c.rate_per_pulse.push_back(rpp);
    c.rate_bps.push_back(bps);
    c.p_x_opt.push_back(px);
    c.eta_tr_opt.push_back(eta);
    c.feasible.push_back(feas ? 1 : 0);
  }
  return c;
}

void write_curve_csv(const RateCurve& curve, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << curve_to_csv(curve);
}

RateCurve read_curve_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open curve CSV: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return curve_from_csv(ss.str());
}

}  // namespace qkd
