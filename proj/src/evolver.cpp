#include "landen_kdv/evolver.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

namespace lkdv {

double stability_bound(const Field& u0, const PeriodicGrid& grid) {
  const double peak = u0.abs().maxCoeff();
  if (peak == 0.0) return std::numeric_limits<double>::infinity();
  return kStabilityConstant * grid.spacing() / peak;
}

int step_count(const EvolverConfig& config) {
  if (!(config.dt > 0.0)) throw std::invalid_argument("evolve: dt must be positive");
  if (!(config.final_time > 0.0)) throw std::invalid_argument("evolve: T must be positive");
  const double ratio = config.final_time / config.dt;
  const double steps = std::round(ratio);
  if (std::abs(ratio - steps) > 1e-9 * steps) {
    throw std::invalid_argument("evolve: T / dt must be an integer, got " + std::to_string(ratio));
  }
  return static_cast<int>(steps);
}

namespace {

class IntegratingFactorRk4 {
 public:
  IntegratingFactorRk4(const PeriodicGrid& grid, double dt, bool dealias)
      : nonlinear_factor_(grid.size()), half_(grid.size()), full_(grid.size()),
        mask_(dealias ? two_thirds_mask(grid.size()) : Eigen::ArrayXd::Ones(grid.size())) {
    const Eigen::ArrayXd k = grid.wavenumbers();
    const int nyquist = grid.size() / 2;
    for (int j = 0; j < grid.size(); ++j) {
      // u_t = 3 (u^2)_x - u_xxx  =>  v_t = 3 i k F[u^2] + i k^3 v
      const double kk = j == nyquist ? 0.0 : k[j];
      nonlinear_factor_[j] = std::complex<double>(0.0, 3.0 * kk * dt) * mask_[j];
      half_[j] = std::exp(std::complex<double>(0.0, kk * kk * kk * dt / 2));
      full_[j] = half_[j] * half_[j];
    }
  }

  void step(Spectrum& v) const {
    const Spectrum a = nonlinear(v);
    const Spectrum b = nonlinear(half_ * (v + a / 2.0));
    const Spectrum c = nonlinear(half_ * v + b / 2.0);
    const Spectrum d = nonlinear(full_ * v + half_ * c);
    v = full_ * v + (full_ * a + 2.0 * half_ * (b + c) + d) / 6.0;
  }

 private:
  Spectrum nonlinear(const Spectrum& v) const {
    const Field u = inverse_fft_real(v * mask_);
    return nonlinear_factor_ * forward_fft(u.square());
  }

  Spectrum nonlinear_factor_;
  Spectrum half_;
  Spectrum full_;
  Eigen::ArrayXd mask_;
};

}  // namespace

Trajectory evolve(const Field& u0, const EvolverConfig& config) {
  const PeriodicGrid& grid = config.grid;
  if (u0.size() != grid.size()) throw std::invalid_argument("evolve: u0 does not match grid");
  if (!u0.allFinite()) throw std::invalid_argument("evolve: u0 must be finite");
  const int steps = step_count(config);
  if (config.enforce_stability_bound && config.dt > stability_bound(u0, grid)) {
    char msg[128];
    std::snprintf(msg, sizeof msg, "instability: dt = %.6g exceeds the stability bound %.6g",
                  config.dt, stability_bound(u0, grid));
    throw InstabilityError(msg);
  }

  const IntegratingFactorRk4 stepper(grid, config.dt, config.dealias);
  Spectrum v = forward_fft(u0);
  const double initial_peak = std::max(v.abs().maxCoeff(), 1e-300);

  Trajectory out;
  out.times.push_back(0.0);
  out.snapshots.push_back(u0);
  for (int n = 1; n <= steps; ++n) {
    stepper.step(v);
    const double peak = v.abs().maxCoeff();
    if (!std::isfinite(peak) || peak > 1e6 * initial_peak) {
      char msg[128];
      std::snprintf(msg, sizeof msg,
                    "instability: spectral amplitude grew to %.3e (initial %.3e) at t = %.6g", peak,
                    initial_peak, n * config.dt);
      throw InstabilityError(msg);
    }
    const bool keep = n == steps || (config.snapshot_every > 0 && n % config.snapshot_every == 0);
    if (keep) {
      out.times.push_back(n * config.dt);
      out.snapshots.push_back(inverse_fft_real(v));
    }
  }
  return out;
}

ConservationReport conservation_report(const Trajectory& trajectory, const PeriodicGrid& grid) {
  if (trajectory.snapshots.empty()) return {0.0, 0.0};
  const double dx = grid.spacing();
  const Field& first = trajectory.snapshots.front();
  const double mass0 = first.sum() * dx;
  const double momentum0 = first.square().sum() * dx;
  // A zero-mean start has no meaningful relative drift; fall back to the L1 norm.
  const double mass_scale = mass0 != 0.0 ? std::abs(mass0) : std::max(first.abs().sum() * dx, 1.0);
  const double momentum_scale = momentum0 != 0.0 ? momentum0 : 1.0;
  ConservationReport rep{0.0, 0.0};
  for (const Field& u : trajectory.snapshots) {
    rep.mass_drift = std::max(rep.mass_drift, std::abs(u.sum() * dx - mass0) / mass_scale);
    rep.momentum_drift =
        std::max(rep.momentum_drift, std::abs(u.square().sum() * dx - momentum0) / momentum_scale);
  }
  return rep;
}

double translation_shift(const Field& u_earlier, const Field& u_later, const PeriodicGrid& grid) {
  const Field a = u_earlier - u_earlier.mean();
  const Field b = u_later - u_later.mean();
  // corr(s) = sum_x b(x) a(x - s)  <=>  F^{-1}[B conj(A)]
  const Spectrum product = forward_fft(b) * forward_fft(a).conjugate();
  const Field corr = inverse_fft_real(product);
  Eigen::Index best = 0;
  corr.maxCoeff(&best);
  return static_cast<double>(best) * grid.spacing();
}

double periodic_distance(double a, double b, double length) {
  const double d = std::fmod(std::abs(a - b), length);
  return std::min(d, length - d);
}

}  // namespace lkdv
