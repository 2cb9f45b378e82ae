#include "landen_kdv/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lkdv {

namespace {

struct Derivatives {
  Field u;
  Field ux;
  Field uxxx;
  double top_third_energy;
};

int period_multiple(double length, double period, double tol) {
  if (!std::isfinite(period) || period <= 0.0) {
    throw PeriodMismatchError("wave has no finite spatial period");
  }
  const double ratio = length / period;
  const double n = std::round(ratio);
  if (n < 1.0 || std::abs(ratio - n) > tol * n) {
    throw PeriodMismatchError("grid length " + std::to_string(length) +
                              " is not an integer multiple of the wave period " +
                              std::to_string(period));
  }
  return static_cast<int>(n);
}

Derivatives differentiate(const Field& u, const PeriodicGrid& grid, const ResidualOptions& opt) {
  Spectrum coeffs = forward_fft(u);
  const double top = top_third_energy_fraction(coeffs);
  if (opt.roundoff_filter) truncate_roundoff(coeffs, u.abs().maxCoeff(), opt.filter_factor);
  return {u, inverse_fft_real(differentiate_spectrum(coeffs, grid, 1)),
          inverse_fft_real(differentiate_spectrum(coeffs, grid, 3)), top};
}

ResidualReport report_from_terms(const Field& ut, const Field& nonlinear, const Field& uxxx,
                                 double top_energy) {
  const Field r = ut + nonlinear + uxxx;
  ResidualReport rep;
  rep.linf = r.abs().maxCoeff();
  rep.l2 = std::sqrt(r.square().mean());
  rep.term_linf = {ut.abs().maxCoeff(), nonlinear.abs().maxCoeff(), uxxx.abs().maxCoeff()};
  rep.scale = *std::max_element(rep.term_linf.begin(), rep.term_linf.end());
  rep.normalized = rep.scale > 0.0 ? rep.linf / rep.scale : 0.0;
  rep.top_third_energy = top_energy;
  rep.aliasing_warning = top_energy > 1e-12;
  return rep;
}

}  // namespace

ResidualReport kdv_residual(const TravelingWave& wave, const PeriodicGrid& grid, double t,
                            const ResidualOptions& options) {
  period_multiple(grid.length(), wave.period, options.period_tol);
  const auto d = differentiate(sample(wave, grid, t), grid, options);
  const Field ut = -wave.velocity * d.ux;
  const Field nonlinear = -6.0 * d.u * d.ux;
  return report_from_terms(ut, nonlinear, d.uxxx, d.top_third_energy);
}

VelocityFit fit_velocity(const TravelingWave& wave, const PeriodicGrid& grid, double t,
                         const ResidualOptions& options) {
  period_multiple(grid.length(), wave.period, options.period_tol);
  const auto d = differentiate(sample(wave, grid, t), grid, options);
  const Field rest = d.uxxx - 6.0 * d.u * d.ux;
  const double norm = d.ux.square().sum();
  if (norm == 0.0) throw std::domain_error("fit_velocity: profile is constant");
  const double v = (d.ux * rest).sum() / norm;
  return {v, report_from_terms(-v * d.ux, -6.0 * d.u * d.ux, d.uxxx, d.top_third_energy)};
}

VelocityCorrectionCheck velocity_correction_dual(int p, double m, double alpha, double beta,
                                                 int points, double tol) {
  const DnWaveParams params(alpha, beta, m, p);
  const double closed = p == 1 ? 0.0 : params.landen()->velocity_correction;
  const PeriodicGrid grid(params.period(), points);
  const auto fit = fit_velocity(traveling_wave(params), grid, 0.0);
  const double b_fit = fit.velocity / (alpha * alpha);
  const double from_residual = (b_fit - (8.0 - 4.0 * m - 6.0 * beta)) / 12.0;
  const double diff = std::abs(closed - from_residual);
  if (!(diff <= tol)) {
    throw ConsistencyError("A(" + std::to_string(p) + ", " + std::to_string(m) +
                           "): closed form and residual fit disagree by " + std::to_string(diff));
  }
  return {closed, from_residual, diff};
}

namespace {

double equivalence_impl(const DnWaveParams& params, const TransformedParams& tp,
                        const PeriodicGrid& grid, std::span<const double> times) {
  const ModulusParameter<double> mt(tp.m_tilde);
  const double at2 = tp.alpha_tilde * tp.alpha_tilde;
  double worst = 0.0;
  for (double t : times) {
    for (int j = 0; j < grid.size(); ++j) {
      const double x = grid.node(j);
      const double d = dn(tp.alpha_tilde * (x - tp.c_tilde * t), mt);
      const double single = -2.0 * at2 * d * d + tp.beta_tilde * at2;
      worst = std::max(worst, std::abs(u_p(x, t, params) - single));
    }
  }
  return worst;
}

}  // namespace

double equivalence_check(const DnWaveParams& params, const LandenMap& map,
                         const PeriodicGrid& grid, std::span<const double> times) {
  if (map.p != params.p() || map.m() != params.m()) {
    throw std::invalid_argument("equivalence_check: map built for different (p, m)");
  }
  return equivalence_impl(params, transform_params(params.alpha(), params.beta(), map), grid,
                          times);
}

double equivalence_check(const DnWaveParams& params, const PeriodicGrid& grid,
                         std::span<const double> times) {
  if (params.p() != 1) return equivalence_check(params, *params.landen(), grid, times);
  const double a = params.alpha();
  const TransformedParams identity{a, params.velocity(), params.beta(), params.m()};
  return equivalence_impl(params, identity, grid, times);
}

double soliton_limit_check(double alpha, double beta, double epsilon, double t, double window,
                           int samples) {
  const DnWaveParams params(alpha, beta, 1.0 - epsilon, 1);
  const double a2 = alpha * alpha;
  // Both sides move with b_1 = 8 - 4m - 6 beta at the evaluated m.
  const double travel = params.velocity() * t;
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double z = -window + 2.0 * window * i / (samples - 1);
    const double x = z / alpha + travel;
    const double sech = 1.0 / std::cosh(alpha * (x - travel));
    const double limit = -2.0 * a2 * sech * sech + beta * a2;
    worst = std::max(worst, std::abs(u1(x, t, params) - limit));
  }
  return worst;
}

PmSuperpositionFit fit_pm_superposition(const PmWaveParams& params, int p, int points) {
  if (p < 1) throw std::invalid_argument("fit_pm_superposition: p must be >= 1");
  const double period = params.period();
  TravelingWave sum{"u_pm_superposed",
                    [params, p, period](double x, double t) {
                      double total = 0.0;
                      for (int i = 0; i < p; ++i) {
                        total += u_pm(x + i * period / p, t, params, VelocityScaling::standard);
                      }
                      return total;
                    },
                    0.0, period};
  const PeriodicGrid grid(period, points);
  const auto fit = fit_velocity(sum, grid, 0.0);
  return {fit.velocity, fit.residual.normalized};
}

}  // namespace lkdv
