#include "landen_kdv/kdv_solutions.hpp"

#include <cmath>
#include <stdexcept>

namespace lkdv {

std::vector<ShiftedPhase> shifted_phases(int p, const ModulusParameter<double>& modulus) {
  std::vector<ShiftedPhase> phases;
  phases.reserve(p);
  for (int i = 1; i <= p; ++i) {
    phases.push_back({i, i == 1 ? 0.0 : 2.0 * (i - 1) * modulus.quarter_period() / p});
  }
  return phases;
}

DnWaveParams::DnWaveParams(double alpha, double beta, double m, int p)
    : alpha_(alpha), beta_(beta), modulus_(m), p_(p) {
  if (!(alpha > 0.0)) throw std::invalid_argument("DnWaveParams: alpha must be positive");
  if (!std::isfinite(beta)) throw std::invalid_argument("DnWaveParams: beta must be finite");
  if (p < 1) throw std::invalid_argument("DnWaveParams: p must be >= 1");
  double correction = 0.0;
  if (p > 1) {
    map_ = landen_map(p, m);
    correction = map_->velocity_correction;
  }
  b_ = 8.0 - 4.0 * m - 6.0 * beta + 12.0 * correction;
  phases_ = shifted_phases(p, modulus_);
}

double DnWaveParams::period() const {
  return modulus_.periodic() ? 2.0 * modulus_.K() / (p_ * alpha_)
                             : std::numeric_limits<double>::infinity();
}

double u_p(double x, double t, const DnWaveParams& params) {
  const double a2 = params.alpha() * params.alpha();
  const double phase = params.alpha() * (x - params.b() * a2 * t);
  double sum = 0.0;
  for (const auto& ph : params.phases()) {
    const double d = dn(phase + ph.offset, params.modulus());
    sum += d * d;
  }
  return -2.0 * a2 * sum + params.beta() * a2;
}

double u1(double x, double t, const DnWaveParams& params) {
  if (params.p() != 1) throw std::invalid_argument("u1: parameters describe p != 1");
  return u_p(x, t, params);
}

std::string to_string(VelocityScaling scaling) {
  return scaling == VelocityScaling::as_written ? "as_written" : "standard";
}

VelocityScaling velocity_scaling_from_string(const std::string& name) {
  if (name == "as_written") return VelocityScaling::as_written;
  if (name == "standard") return VelocityScaling::standard;
  throw std::invalid_argument("unknown velocity scaling '" + name + "'");
}

PmWaveParams::PmWaveParams(double alpha, double m, int sign)
    : alpha_(alpha), modulus_(m), sign_(sign) {
  if (!(alpha > 0.0)) throw std::invalid_argument("PmWaveParams: alpha must be positive");
  if (sign != 1 && sign != -1) throw std::invalid_argument("PmWaveParams: sign must be +1 or -1");
}

double PmWaveParams::velocity(VelocityScaling scaling) const {
  return scaling == VelocityScaling::as_written ? q1() * alpha_ : q1() * alpha_ * alpha_;
}

double PmWaveParams::period() const {
  return modulus_.periodic() ? 4.0 * modulus_.K() / alpha_
                             : std::numeric_limits<double>::infinity();
}

double u_pm(double x, double t, const PmWaveParams& params, VelocityScaling scaling) {
  const double eta = params.alpha() * (x - params.velocity(scaling) * t);
  const auto f = jacobi(eta, params.modulus());
  const double m = params.m();
  return params.alpha() * params.alpha() *
         (m * f.sn * f.sn + params.sign() * std::sqrt(m) * f.cn * f.dn);
}

TravelingWave traveling_wave(const DnWaveParams& params) {
  return {params.p() == 1 ? "u1" : "up",
          [params](double x, double t) { return u_p(x, t, params); }, params.velocity(),
          params.period()};
}

TravelingWave traveling_wave(const PmWaveParams& params, VelocityScaling scaling) {
  return {params.sign() > 0 ? "u+" : "u-",
          [params, scaling](double x, double t) { return u_pm(x, t, params, scaling); },
          params.velocity(scaling), params.period()};
}

Field sample(const TravelingWave& wave, const PeriodicGrid& grid, double t) {
  Field values(grid.size());
  for (int j = 0; j < grid.size(); ++j) values[j] = wave.profile(grid.node(j), t);
  return values;
}

}  // namespace lkdv
