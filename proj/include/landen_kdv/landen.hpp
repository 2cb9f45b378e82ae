// Generalized (degree-p) Landen map for dn and the constants it induces.
#pragma once

#include <stdexcept>
#include <vector>

#include "landen_kdv/elliptic.hpp"

namespace lkdv {

/// Raised when a quantity that must be constant (or two independent
/// determinations that must agree) fails its numerical check.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything the degree-p transformation m -> m_tilde needs, built once.
///
///   dn(x, m_tilde) = gamma * sum_i dn(gamma x + shifts[i], m)
///
/// with shifts[i] = 2 i K(m) / p for i = 0..p-1. `cyclic[r-1]` holds
/// a_p(r) = sum_i dn(u + shifts[i]) dn(u + shifts[(i + r) mod p]) for
/// r = 1..p-1; these are independent of u. The r = p pairing is the sum of
/// squares and is not a constant, so it is not part of the list.
struct LandenMap {
  int p = 1;
  ModulusParameter<double> modulus{0.5};
  double gamma = 1.0;
  double m_tilde = 0.5;
  std::vector<double> shifts;
  std::vector<double> cyclic;
  double cyclic_sum = 0.0;
  /// Velocity correction A(p, m) of the superposed wave, b_p = 8 - 4m - 6 beta + 12 A.
  double velocity_correction = 0.0;

  double m() const { return modulus.m(); }
  double K() const { return modulus.K(); }
};

/// Reference arguments for the constancy check of a_p(r). Away from the
/// lattice-symmetric points 0, K/p, 2K/p.
inline constexpr double kCyclicReferencePoints[] = {0.1, 0.35, 0.6, 0.85, 1.1, 1.35, 1.6, 1.85};

/// Builds the map. Requires p >= 1 and 0 < m < 1 (std::domain_error
/// otherwise). Throws ConsistencyError if some a_p(r) varies by more than
/// `constancy_tol` across the reference points.
LandenMap landen_map(int p, double m, double constancy_tol = 1e-9);

/// a_p(r) evaluated at argument u, 1 <= r <= p.
double cyclic_constant_at(const LandenMap& map, int r, double u);

/// Sample standard deviation of a_p(r) over `points`.
double cyclic_constant_spread(const LandenMap& map, int r, const std::vector<double>& points);

/// gamma * sum_i dn(gamma x + shift_i, m); equals dn(x, m_tilde).
double dn_landen_rhs(double x, const LandenMap& map);

/// gamma^2 [sum_i dn^2(gamma x + shift_i, m) + sum_r a_p(r)]; equals dn^2(x, m_tilde).
double dn2_landen_rhs(double x, const LandenMap& map);

/// Closed-form A(p, m) from requiring the transformed cnoidal wave to move at
/// its own velocity: 12 A = (8 - 4 m_tilde) / gamma^2 - (8 - 4 m) - 12 sum_r a_p(r).
/// The beta terms cancel.
double velocity_correction(const LandenMap& map);
double velocity_correction(int p, double m);

/// Parameters of the single cnoidal wave that reproduces the p-term superposition.
struct TransformedParams {
  double alpha_tilde;
  double c_tilde;  ///< wave speed b_p alpha^2
  double beta_tilde;
  double m_tilde;
};

TransformedParams transform_params(double alpha, double beta, const LandenMap& map);

}  // namespace lkdv
