#include <doctest.h>

#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/jacobi_elliptic.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "landen_kdv/elliptic.hpp"

using lkdv::complete_k;
using lkdv::jacobi;
using lkdv::ModulusParameter;

namespace {

// K(m) = pi/2 * sum_n [(2n)! / (2^{2n} (n!)^2)]^2 m^n, summed until the term
// is below roundoff. Independent of the AGM route.
double k_series(double m) {
  double coeff = 1.0;
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 5000; ++n) {
    coeff *= (2.0 * n - 1.0) / (2.0 * n);
    term = coeff * coeff * std::pow(m, n);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return std::numbers::pi / 2 * sum;
}

}  // namespace

TEST_CASE("complete K: closed value, series oracle and domain") {
  CHECK(complete_k(0.0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-16));
  // mpmath reference: 1.8540746773013719184...
  CHECK(std::abs(complete_k(0.5) - 1.8540746773013719) / 1.8540746773013719 < 1e-15);
  for (double m : {0.01, 0.1, 0.3, 0.5, 0.7, 0.9}) {
    CAPTURE(m);
    CHECK(std::abs(complete_k(m) - k_series(m)) / k_series(m) < 1e-13);
    CHECK(std::abs(complete_k(m) - boost::math::ellint_1(std::sqrt(m))) / complete_k(m) < 1e-14);
  }
  CHECK_THROWS_AS(complete_k(1.0), std::domain_error);
  CHECK_THROWS_AS(complete_k(-0.1), std::domain_error);
  CHECK_THROWS_AS(complete_k(std::nan("")), std::domain_error);
}

TEST_CASE("complete K is increasing") {
  double prev = complete_k(0.0);
  for (int i = 1; i < 200; ++i) {
    const double k = complete_k(i / 200.0 * 0.999);
    CHECK(k > prev);
    prev = k;
  }
}

TEST_CASE("modulus parameter caches K and guards m = 1") {
  const ModulusParameter<double> mod(0.5);
  CHECK(mod.K() == complete_k(0.5));
  CHECK(mod.complementary() == doctest::Approx(std::sqrt(0.5)));
  const ModulusParameter<double> soliton(1.0);
  CHECK_FALSE(soliton.periodic());
  CHECK(std::isinf(soliton.K()));
  CHECK_THROWS_AS(soliton.quarter_period(), std::domain_error);
  CHECK_THROWS_AS(ModulusParameter<double>(1.5), std::domain_error);
}

TEST_CASE("jacobi: special values") {
  for (double m : {0.0, 0.2, 0.5, 0.99, 1.0}) {
    const auto t = jacobi(0.0, m);
    CHECK(t.sn == 0.0);
    CHECK(t.cn == 1.0);
    CHECK(t.dn == 1.0);
  }
  for (double x : {-19.5, -3.0, 0.4, 1.0, 7.25, 20.0}) {
    const auto trig = jacobi(x, 0.0);
    CHECK(std::abs(trig.sn - std::sin(x)) < 1e-13);
    CHECK(std::abs(trig.cn - std::cos(x)) < 1e-13);
    CHECK(trig.dn == 1.0);
    const auto hyp = jacobi(x, 1.0);
    CHECK(std::abs(hyp.sn - std::tanh(x)) < 1e-13);
    CHECK(std::abs(hyp.cn - 1.0 / std::cosh(x)) < 1e-13);
    CHECK(std::abs(hyp.dn - 1.0 / std::cosh(x)) < 1e-13);
  }
  for (double m : {0.1, 0.5, 0.8, 0.99}) {
    CAPTURE(m);
    const auto q = jacobi(complete_k(m), m);
    CHECK(std::abs(q.sn - 1.0) < 1e-14);
    CHECK(std::abs(q.cn) < 1e-14);
    CHECK(std::abs(q.dn - std::sqrt(1 - m)) < 1e-14);
  }
}

TEST_CASE("jacobi: small-parameter limits stay continuous") {
  for (double m : {1e-20, 1e-14, 1e-8}) {
    const auto t = jacobi(0.9, m);
    CHECK(std::abs(t.sn - std::sin(0.9)) < 2 * m + 1e-15);
    CHECK(std::abs(t.dn - 1.0) < m);
  }
  for (double m : {1.0 - 1e-10, 1.0 - 1e-14}) {
    const auto t = jacobi(2.0, m);
    CHECK(std::abs(t.sn - std::tanh(2.0)) < 1e-8);
    CHECK(std::abs(t.dn - 1 / std::cosh(2.0)) < 1e-8);
  }
}

TEST_CASE("jacobi: domain errors") {
  CHECK_THROWS_AS(jacobi(0.3, -0.01), std::domain_error);
  CHECK_THROWS_AS(jacobi(0.3, 1.01), std::domain_error);
  CHECK_THROWS_AS(jacobi(std::numeric_limits<double>::infinity(), 0.5), std::domain_error);
  CHECK_THROWS_AS(jacobi(std::nan(""), 0.5), std::domain_error);
}

TEST_CASE("jacobi: agrees with boost on random arguments") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> xs(-20.0, 20.0);
  std::uniform_real_distribution<double> ms(0.0, 0.99);
  double worst = 0.0;
  for (int i = 0; i < 5000; ++i) {
    const double x = xs(rng);
    const double m = ms(rng);
    double cn_ref = 0.0;
    double dn_ref = 0.0;
    const double sn_ref = boost::math::jacobi_elliptic(std::sqrt(m), x, &cn_ref, &dn_ref);
    const auto t = jacobi(x, m);
    worst = std::max({worst, std::abs(t.sn - sn_ref), std::abs(t.cn - cn_ref),
                      std::abs(t.dn - dn_ref)});
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("jacobi: algebraic invariants and dn bounds (property)") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> xs(-50.0, 50.0);
  std::uniform_real_distribution<double> ms(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = xs(rng);
    const double m = ms(rng);
    const auto t = jacobi(x, m);
    REQUIRE(std::abs(t.sn * t.sn + t.cn * t.cn - 1.0) < 1e-12);
    REQUIRE(std::abs(m * t.sn * t.sn + t.dn * t.dn - 1.0) < 1e-12);
    REQUIRE(t.dn <= 1.0 + 1e-15);
    REQUIRE(t.dn >= std::sqrt(1.0 - m) - 1e-15);
  }
}

TEST_CASE("jacobi: periodicity and quarter-period product") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> xs(-5.0, 5.0);
  for (double m : {0.05, 0.3, 0.6, 0.9, 0.99}) {
    const ModulusParameter<double> mod(m);
    const double K = mod.K();
    for (int i = 0; i < 200; ++i) {
      const double x = xs(rng);
      const auto base = jacobi(x, mod);
      CHECK(std::abs(jacobi(x + 2 * K, mod).dn - base.dn) < 1e-11);
      CHECK(std::abs(jacobi(x + 4 * K, mod).sn - base.sn) < 1e-11);
      CHECK(std::abs(jacobi(x + K, mod).dn * base.dn - mod.complementary()) < 1e-11);
    }
  }
}

TEST_CASE("jacobi: long double instantiation") {
  const auto t = jacobi(0.7L, 0.5L);
  const auto d = jacobi(0.7, 0.5);
  CHECK(std::abs(static_cast<double>(t.dn) - d.dn) < 1e-15);
  CHECK(std::abs(0.5L * t.sn * t.sn + t.dn * t.dn - 1.0L) < 1e-17L);
}
