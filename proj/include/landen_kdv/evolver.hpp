// Pseudo-spectral time integration of u_t - 6 u u_x + u_xxx = 0 on a periodic grid.
#pragma once

#include <stdexcept>
#include <vector>

#include "landen_kdv/spectral.hpp"

namespace lkdv {

class InstabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TimeScheme { integrating_factor_rk4 };

/// Largest dt the advective bound admits: C dx / max|u0|. The dispersive
/// term is integrated exactly, so no dx^3 restriction applies.
inline constexpr double kStabilityConstant = 0.2;

struct EvolverConfig {
  PeriodicGrid grid{1.0, 64};
  double dt = 1e-4;
  double final_time = 0.0;
  TimeScheme scheme = TimeScheme::integrating_factor_rk4;
  bool dealias = true;
  /// Keep every n-th step in the trajectory (0: initial and final state only).
  int snapshot_every = 0;
  /// Reject dt above the advective bound before stepping.
  bool enforce_stability_bound = true;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Field> snapshots;

  const Field& final_state() const { return snapshots.back(); }
};

double stability_bound(const Field& u0, const PeriodicGrid& grid);

/// Number of steps T / dt; std::invalid_argument if T / dt is not integral.
int step_count(const EvolverConfig& config);

/// Integrating-factor RK4: the linear term is propagated exactly in Fourier
/// space, the nonlinear term 3 (u^2)_x is stepped explicitly with optional
/// 2/3 dealiasing. Throws InstabilityError when the solution exceeds 1e6
/// times its initial maximum (or becomes non-finite), or when dt violates the
/// stability bound and `enforce_stability_bound` is set.
Trajectory evolve(const Field& u0, const EvolverConfig& config);

struct ConservationReport {
  double mass_drift;  ///< max relative change of the integral of u
  double momentum_drift;  ///< max relative change of the integral of u^2
};

ConservationReport conservation_report(const Trajectory& trajectory, const PeriodicGrid& grid);

/// Shift s in [0, L) maximizing the circular cross-correlation of u_later
/// against u_earlier, i.e. u_later(x) ~ u_earlier(x - s). Resolution is one cell.
double translation_shift(const Field& u_earlier, const Field& u_later, const PeriodicGrid& grid);

/// Periodic distance between two shifts on a circle of circumference L.
double periodic_distance(double a, double b, double length);

}  // namespace lkdv
