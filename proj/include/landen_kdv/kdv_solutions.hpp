// Exact periodic traveling-wave solutions of u_t - 6 u u_x + u_xxx = 0.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "landen_kdv/elliptic.hpp"
#include "landen_kdv/landen.hpp"
#include "landen_kdv/spectral.hpp"

namespace lkdv {

/// Phase offset 2 (i-1) K(m) / p of the i-th term (1-based) of a superposition.
struct ShiftedPhase {
  int index;
  double offset;
};

std::vector<ShiftedPhase> shifted_phases(int p, const ModulusParameter<double>& modulus);

/// Superposed dn^2 wave
///
///   u_p(x, t) = -2 alpha^2 sum_{i=1..p} dn^2[alpha (x - b_p alpha^2 t) + 2 (i-1) K / p, m] + beta alpha^2
///
/// with b_p = 8 - 4m - 6 beta + 12 A(p, m). p = 1 is the cnoidal wave and is
/// the only case that admits m = 0 or m = 1 (the solitary wave).
class DnWaveParams {
 public:
  DnWaveParams(double alpha, double beta, double m, int p = 1);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double m() const { return modulus_.m(); }
  int p() const { return p_; }
  const ModulusParameter<double>& modulus() const { return modulus_; }
  /// Velocity coefficient b_p; the physical speed is b_p alpha^2.
  double b() const { return b_; }
  double velocity() const { return b_ * alpha_ * alpha_; }
  /// Spatial period 2K / (p alpha); +inf when m = 1.
  double period() const;
  const std::vector<ShiftedPhase>& phases() const { return phases_; }
  /// Landen map for (p, m); empty for p = 1.
  const std::optional<LandenMap>& landen() const { return map_; }

 private:
  double alpha_;
  double beta_;
  ModulusParameter<double> modulus_;
  int p_;
  std::optional<LandenMap> map_;
  double b_;
  std::vector<ShiftedPhase> phases_;
};

/// Cnoidal wave; requires params.p() == 1 (std::invalid_argument otherwise).
double u1(double x, double t, const DnWaveParams& params);
double u_p(double x, double t, const DnWaveParams& params);

enum class VelocityScaling {
  as_written,  ///< eta = alpha (x - q1 alpha t)
  standard,    ///< eta = alpha (x - q1 alpha^2 t), the KdV scaling-symmetric form
};

std::string to_string(VelocityScaling scaling);
VelocityScaling velocity_scaling_from_string(const std::string& name);

/// u_pm = alpha^2 [m sn^2(eta) + sign sqrt(m) cn(eta) dn(eta)], q1 = -1 - m.
class PmWaveParams {
 public:
  PmWaveParams(double alpha, double m, int sign);

  double alpha() const { return alpha_; }
  double m() const { return modulus_.m(); }
  int sign() const { return sign_; }
  const ModulusParameter<double>& modulus() const { return modulus_; }
  double q1() const { return -1.0 - modulus_.m(); }
  double velocity(VelocityScaling scaling) const;
  /// 4K / alpha (cn dn has period 4K).
  double period() const;

 private:
  double alpha_;
  ModulusParameter<double> modulus_;
  int sign_;
};

double u_pm(double x, double t, const PmWaveParams& params, VelocityScaling scaling);

/// Family-agnostic view of a traveling wave u(x, t) = f(x - V t) used by the
/// residual verifier and the evolver.
struct TravelingWave {
  std::string name;
  std::function<double(double, double)> profile;
  double velocity;
  double period;
};

TravelingWave traveling_wave(const DnWaveParams& params);
TravelingWave traveling_wave(const PmWaveParams& params, VelocityScaling scaling);

Field sample(const TravelingWave& wave, const PeriodicGrid& grid, double t);

}  // namespace lkdv
