// Quantitative checks: KdV residuals, Landen equivalence, soliton limit.
#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>

#include "landen_kdv/kdv_solutions.hpp"
#include "landen_kdv/landen.hpp"
#include "landen_kdv/spectral.hpp"

namespace lkdv {

class PeriodMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Norms of r = u_t - 6 u u_x + u_xxx on a periodic grid.
struct ResidualReport {
  double linf = 0.0;
  double l2 = 0.0;  ///< root-mean-square over the nodes
  double scale = 0.0;  ///< largest max-norm among the three terms
  double normalized = 0.0;  ///< linf / scale
  std::array<double, 3> term_linf{};  ///< u_t, -6 u u_x, u_xxx
  double top_third_energy = 0.0;
  bool aliasing_warning = false;  ///< top third of spectrum above 1e-12 of the energy
};

struct ResidualOptions {
  /// Drop Fourier coefficients at the roundoff level of the samples before
  /// differentiating; otherwise the k^3 factor amplifies sampling noise.
  bool roundoff_filter = true;
  double filter_factor = 16.0;
  /// Relative tolerance for L being an integer multiple of the wave period.
  double period_tol = 1e-9;
};

/// Residual of a traveling wave at time t. Spatial derivatives are spectral;
/// u_t = -V u_x uses the family's velocity. The grid length must be an
/// integer multiple of wave.period (PeriodMismatchError otherwise).
ResidualReport kdv_residual(const TravelingWave& wave, const PeriodicGrid& grid, double t,
                            const ResidualOptions& options = {});

/// Velocity V minimizing || -V u_x - 6 u u_x + u_xxx ||_2 for the sampled
/// profile; together with the residual left after the fit.
struct VelocityFit {
  double velocity;
  ResidualReport residual;
};

VelocityFit fit_velocity(const TravelingWave& wave, const PeriodicGrid& grid, double t,
                         const ResidualOptions& options = {});

/// A(p, m) from the closed-form consistency relation and from the velocity
/// that zeroes the KdV residual of u_p.
struct VelocityCorrectionCheck {
  double closed_form;
  double from_residual;
  double difference;
};

/// Throws ConsistencyError if |closed_form - from_residual| > tol.
VelocityCorrectionCheck velocity_correction_dual(int p, double m, double alpha = 1.0,
                                                 double beta = 0.0, int points = 256,
                                                 double tol = 1e-8);

/// Max over grid nodes and time slices of |u_p - (-2 at^2 dn^2[at (x - ct t), mt] + bt at^2)|
/// using transform_params. `map` must be built for (params.p(), params.m()).
double equivalence_check(const DnWaveParams& params, const LandenMap& map,
                         const PeriodicGrid& grid, std::span<const double> times);

/// Same for p = 1, where no Landen map exists: compares u1 with itself
/// through the identity transformation.
double equivalence_check(const DnWaveParams& params, const PeriodicGrid& grid,
                         std::span<const double> times);

/// Max deviation of u1 at m = 1 - epsilon from -2 alpha^2 sech^2(z) + beta alpha^2
/// over |z| <= window, z = alpha (x - b_1 alpha^2 t).
double soliton_limit_check(double alpha, double beta, double epsilon = 1e-12, double t = 0.0,
                           double window = 5.0, int samples = 2001);

/// Velocity search for p shifted copies of u_pm (shift = period / p). No
/// closed form is claimed; the fit and the residual it leaves are reported.
struct PmSuperpositionFit {
  double velocity;
  double normalized_residual;
};

PmSuperpositionFit fit_pm_superposition(const PmWaveParams& params, int p, int points = 256);

}  // namespace lkdv
