// Jacobi elliptic functions and the complete elliptic integral K.
//
// Convention: the second argument is always the MODULUS PARAMETER m = k^2,
// never the modulus k. dn(x, m) has real period 2K(m), sn and cn have 4K(m).
#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lkdv {

/// Arithmetic-geometric mean of two positive numbers.
template <typename Scalar>
Scalar agm(Scalar a, Scalar b) {
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  for (int iter = 0; iter < 64; ++iter) {
    const Scalar next_a = (a + b) / 2;
    const Scalar next_b = std::sqrt(a * b);
    a = next_a;
    b = next_b;
    if (std::abs(a - b) <= eps * a) break;
  }
  return (a + b) / 2;
}

/// Complete elliptic integral of the first kind, K(m) = pi / (2 AGM(1, sqrt(1-m))).
/// Throws std::domain_error unless 0 <= m < 1.
template <typename Scalar>
Scalar complete_k(Scalar m) {
  if (!(m >= Scalar(0) && m < Scalar(1))) {
    throw std::domain_error("complete_k: modulus parameter must satisfy 0 <= m < 1, got " +
                            std::to_string(static_cast<double>(m)));
  }
  return std::numbers::pi_v<Scalar> / (2 * agm(Scalar(1), std::sqrt(Scalar(1) - m)));
}

/// Modulus parameter m in [0, 1] with its quarter period cached.
/// K is +inf for the degenerate m = 1 (solitary-wave) case.
template <typename Scalar = double>
class ModulusParameter {
 public:
  explicit ModulusParameter(Scalar m) : m_(m) {
    if (!(m >= Scalar(0) && m <= Scalar(1))) {
      throw std::domain_error("modulus parameter must lie in [0, 1], got " +
                              std::to_string(static_cast<double>(m)));
    }
    k_ = m < Scalar(1) ? complete_k(m) : std::numeric_limits<Scalar>::infinity();
  }

  Scalar m() const { return m_; }
  Scalar K() const { return k_; }
  /// sqrt(1 - m), the complementary modulus k'.
  Scalar complementary() const { return std::sqrt(Scalar(1) - m_); }
  bool periodic() const { return m_ < Scalar(1); }

  /// K, but throws for m = 1 where no finite period exists.
  Scalar quarter_period() const {
    if (!periodic()) throw std::domain_error("quarter period diverges at m = 1");
    return k_;
  }

 private:
  Scalar m_;
  Scalar k_;
};

template <typename Scalar = double>
struct JacobiTriple {
  Scalar x;
  Scalar sn;
  Scalar cn;
  Scalar dn;
};

namespace detail {

// Descending Landen (Gauss) ladder. Each rung maps parameter k_n to
// k_{n+1} = (1 - k'_n) / (1 + k'_n) and the argument to w / (1 + k_{n+1});
// once m_N is negligible the functions are seeded from sin/cos and the
// ascending relations rebuild sn, cn, dn at the original parameter.
template <typename Scalar>
JacobiTriple<Scalar> landen_ladder(Scalar x, Scalar m) {
  constexpr int kMaxRungs = 40;
  const Scalar floor_m = std::min(Scalar(1e-16), std::numeric_limits<Scalar>::epsilon());

  std::array<Scalar, kMaxRungs> k_rung{};
  int rungs = 0;
  Scalar mn = m;
  Scalar kp = std::sqrt(Scalar(1) - m);
  Scalar w = x;
  while (mn >= floor_m && rungs < kMaxRungs) {
    const Scalar one_plus_kp = Scalar(1) + kp;
    // (1 - k') / (1 + k') written without the cancellation in 1 - k'.
    const Scalar k_next = mn / (one_plus_kp * one_plus_kp);
    kp = 2 * std::sqrt(kp) / one_plus_kp;
    k_rung[rungs++] = k_next;
    w /= Scalar(1) + k_next;
    mn = k_next * k_next;
  }

  // First-order seed in the residual parameter.
  const Scalar s0 = std::sin(w);
  const Scalar c0 = std::cos(w);
  const Scalar corr = mn / 4 * (w - s0 * c0);
  Scalar sn = s0 - corr * c0;
  Scalar cn = c0 + corr * s0;
  Scalar dn = Scalar(1) - mn / 2 * s0 * s0;

  for (int n = rungs - 1; n >= 0; --n) {
    const Scalar k1 = k_rung[n];
    const Scalar ks2 = k1 * sn * sn;
    const Scalar denom = Scalar(1) + ks2;
    const Scalar sn_up = (Scalar(1) + k1) * sn / denom;
    const Scalar cn_up = cn * dn / denom;
    const Scalar dn_up = (Scalar(1) - ks2) / denom;
    sn = sn_up;
    cn = cn_up;
    dn = dn_up;
  }
  return {x, sn, cn, dn};
}

template <typename Scalar>
JacobiTriple<Scalar> jacobi_reduced(Scalar x, Scalar m, Scalar quarter) {
  if (!std::isfinite(x)) throw std::domain_error("jacobi: argument must be finite");
  if (m == Scalar(1)) {
    const Scalar sech = Scalar(1) / std::cosh(x);
    return {x, std::tanh(x), sech, sech};
  }
  if (m == Scalar(0)) return {x, std::sin(x), std::cos(x), Scalar(1)};
  const Scalar reduced = std::remainder(x, 4 * quarter);
  auto triple = landen_ladder(reduced, m);
  triple.x = x;
  return triple;
}

}  // namespace detail

/// sn, cn, dn at (x, m) for 0 <= m <= 1. The argument is reduced modulo 4K
/// before the Landen ladder; m = 1 uses tanh/sech directly.
template <typename Scalar>
JacobiTriple<Scalar> jacobi(Scalar x, Scalar m) {
  if (!(m >= Scalar(0) && m <= Scalar(1))) {
    throw std::domain_error("jacobi: modulus parameter must lie in [0, 1], got " +
                            std::to_string(static_cast<double>(m)));
  }
  const Scalar quarter = (m > Scalar(0) && m < Scalar(1)) ? complete_k(m) : Scalar(0);
  return detail::jacobi_reduced(x, m, quarter);
}

/// Same as above, reusing the cached quarter period.
template <typename Scalar>
JacobiTriple<Scalar> jacobi(Scalar x, const ModulusParameter<Scalar>& mod) {
  return detail::jacobi_reduced(x, mod.m(), mod.periodic() ? mod.K() : Scalar(0));
}

template <typename Scalar>
Scalar dn(Scalar x, const ModulusParameter<Scalar>& mod) {
  return jacobi(x, mod).dn;
}

}  // namespace lkdv
