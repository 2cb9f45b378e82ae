#include "landen_kdv/landen.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace lkdv {

namespace {

void require_map_domain(int p, double m) {
  if (p < 1) throw std::domain_error("landen_map: p must be >= 1, got " + std::to_string(p));
  if (!(m > 0.0 && m < 1.0)) {
    throw std::domain_error("landen_map: modulus parameter must satisfy 0 < m < 1, got " +
                            std::to_string(m));
  }
}

}  // namespace

double cyclic_constant_at(const LandenMap& map, int r, double u) {
  const int p = map.p;
  double sum = 0.0;
  for (int i = 0; i < p; ++i) {
    const int j = (i + r) % p;
    sum += dn(u + map.shifts[i], map.modulus) * dn(u + map.shifts[j], map.modulus);
  }
  return sum;
}

double cyclic_constant_spread(const LandenMap& map, int r, const std::vector<double>& points) {
  if (points.size() < 2) return 0.0;
  std::vector<double> values;
  values.reserve(points.size());
  for (double u : points) values.push_back(cyclic_constant_at(map, r, u));
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / values.size();
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / (values.size() - 1));
}

LandenMap landen_map(int p, double m, double constancy_tol) {
  require_map_domain(p, m);
  LandenMap map;
  map.p = p;
  map.modulus = ModulusParameter<double>(m);
  map.shifts.resize(p);
  for (int i = 0; i < p; ++i) map.shifts[i] = 2.0 * i * map.K() / p;

  double dn_sum = 0.0;
  double dn_cube_sum = 0.0;
  for (double s : map.shifts) {
    const double d = dn(s, map.modulus);
    dn_sum += d;
    dn_cube_sum += d * d * d;
  }
  map.gamma = 1.0 / dn_sum;
  const double g2 = map.gamma * map.gamma;
  map.m_tilde = p == 1 ? m : (m - 2.0) * g2 + 2.0 * g2 * map.gamma * dn_cube_sum;

  map.cyclic.resize(p - 1);
  for (int r = 1; r < p; ++r) {
    const double value = cyclic_constant_at(map, r, kCyclicReferencePoints[0]);
    for (double u : kCyclicReferencePoints) {
      const double other = cyclic_constant_at(map, r, u);
      if (std::abs(other - value) > constancy_tol) {
        throw ConsistencyError("a_" + std::to_string(p) + "(" + std::to_string(r) +
                               ") is not constant: varies by " +
                               std::to_string(std::abs(other - value)));
      }
    }
    map.cyclic[r - 1] = value;
  }
  map.cyclic_sum = std::accumulate(map.cyclic.begin(), map.cyclic.end(), 0.0);
  map.velocity_correction = velocity_correction(map);
  return map;
}

double dn_landen_rhs(double x, const LandenMap& map) {
  double sum = 0.0;
  for (double s : map.shifts) sum += dn(map.gamma * x + s, map.modulus);
  return map.gamma * sum;
}

double dn2_landen_rhs(double x, const LandenMap& map) {
  double sum = 0.0;
  for (double s : map.shifts) {
    const double d = dn(map.gamma * x + s, map.modulus);
    sum += d * d;
  }
  return map.gamma * map.gamma * (sum + map.cyclic_sum);
}

double velocity_correction(const LandenMap& map) {
  if (map.p == 1) return 0.0;
  const double g2 = map.gamma * map.gamma;
  return ((8.0 - 4.0 * map.m_tilde) / g2 - (8.0 - 4.0 * map.m()) - 12.0 * map.cyclic_sum) / 12.0;
}

double velocity_correction(int p, double m) { return landen_map(p, m).velocity_correction; }

TransformedParams transform_params(double alpha, double beta, const LandenMap& map) {
  if (!(alpha > 0.0)) throw std::domain_error("transform_params: alpha must be positive");
  const double g2 = map.gamma * map.gamma;
  const double b_p = 8.0 - 4.0 * map.m() - 6.0 * beta + 12.0 * map.velocity_correction;
  return {alpha / map.gamma, b_p * alpha * alpha, beta * g2 + 2.0 * g2 * map.cyclic_sum,
          map.m_tilde};
}

}  // namespace lkdv
