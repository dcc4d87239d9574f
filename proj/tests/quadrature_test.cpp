#include <cmath>
#include <numbers>

#include "doctest.h"
#include "holes2d/quadrature.hpp"

using namespace holes2d;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;
}

TEST_SUITE("quadrature") {

TEST_CASE("trapezoid rule integrates trigonometric polynomials exactly") {
  const PeriodicRule rule(16);
  CHECK(rule.weight() == doctest::Approx(kTwoPi / 16).epsilon(1e-16));

  Eigen::VectorXd ones = Eigen::VectorXd::Ones(16);
  CHECK(integrate_periodic(rule, ones) == doctest::Approx(kTwoPi).epsilon(1e-15));

  Eigen::VectorXd c3(16), mixed(16);
  for (int k = 0; k < 16; ++k) {
    c3[k] = std::cos(3.0 * rule.node(k));
    mixed[k] = 1.0 + std::sin(2.0 * rule.node(k)) - 0.3 * std::cos(7.0 * rule.node(k));
  }
  CHECK(std::abs(integrate_periodic(rule, c3)) < 1e-14);
  CHECK(integrate_periodic(rule, mixed) == doctest::Approx(kTwoPi).epsilon(1e-14));
}

TEST_CASE("trapezoid rule converges spectrally for analytic integrands") {
  auto f = [](double t) { return std::exp(std::sin(t)); };
  auto value = [&](int M) {
    const PeriodicRule rule(M);
    Eigen::VectorXd s(M);
    for (int k = 0; k < M; ++k) s[k] = f(rule.node(k));
    return integrate_periodic(rule, s);
  };
  CHECK(std::abs(value(64) - value(128)) < 1e-13);
}

TEST_CASE("log weights: circulant symmetric matrix, zero row sums") {
  const PeriodicRule rule(32);
  const auto& R = rule.log_weights();
  REQUIRE(R.rows() == 32);
  CHECK((R - R.transpose()).lpNorm<Eigen::Infinity>() < 1e-14);
  for (int i = 0; i < 32; ++i) {
    for (int k = 0; k < 32; ++k) {
      CHECK(R(i, k) == doctest::Approx(R((i + 5) % 32, (k + 5) % 32)).epsilon(1e-15));
    }
  }
  // int_0^{2pi} log(4 sin^2(t/2)) dt = 0
  CHECK((R * Eigen::VectorXd::Ones(32)).lpNorm<Eigen::Infinity>() < 1e-13);
}

TEST_CASE("log weights reproduce the cosine transform of the log kernel") {
  // int_0^{2pi} log(4 sin^2((t-s)/2)) cos(m s) ds = -(2 pi / m) cos(m t)
  const PeriodicRule rule(64);
  const auto& R = rule.log_weights();
  for (int m : {1, 3, 10}) {
    Eigen::VectorXd q(64), expect(64);
    for (int k = 0; k < 64; ++k) {
      q[k] = std::cos(m * rule.node(k));
      expect[k] = -(kTwoPi / m) * std::cos(m * rule.node(k));
    }
    CHECK(((R * q) - expect).lpNorm<Eigen::Infinity>() < 1e-12);
  }
}

TEST_CASE("log weights converge for a smooth non-polynomial factor") {
  auto apply = [](int M, double t_shift) {
    const PeriodicRule rule(M);
    Eigen::VectorXd q(M);
    for (int k = 0; k < M; ++k) {
      q[k] = std::exp(std::cos(rule.node(k) + t_shift));
    }
    return (rule.log_weights() * q)[0];
  };
  CHECK(std::abs(apply(64, 0.7) - apply(256, 0.7)) < 1e-12);
}

TEST_CASE("trigonometric interpolation is exact on resolved modes") {
  const int M = 16;
  auto f = [](double t) { return 0.3 + std::cos(3.0 * t) - 2.0 * std::sin(5.0 * t); };
  Eigen::VectorXd samples(M);
  for (int k = 0; k < M; ++k) samples[k] = f(kTwoPi * k / M);
  const TrigInterpolant p(samples);
  for (int k = 0; k < 64; ++k) {
    const double t = kTwoPi * k / 64 + 0.123;
    CHECK(p(t) == doctest::Approx(f(t)).epsilon(1e-13));
  }
  const Eigen::VectorXd fine = p.resample(64);
  for (int k = 0; k < 64; ++k) {
    CHECK(fine[k] == doctest::Approx(f(kTwoPi * k / 64)).epsilon(1e-13));
  }
}

TEST_CASE("interpolation reproduces the samples at the original nodes") {
  const int M = 32;
  Eigen::VectorXd samples(M);
  for (int k = 0; k < M; ++k) samples[k] = std::exp(std::sin(kTwoPi * k / M));
  const TrigInterpolant p(samples);
  const Eigen::VectorXd back = p.resample(M);
  CHECK((back - samples).lpNorm<Eigen::Infinity>() < 1e-13);
}

TEST_CASE("invalid sizes are rejected") {
  CHECK_THROWS(PeriodicRule(7));
  CHECK_THROWS(PeriodicRule(2));
  const PeriodicRule rule(8);
  CHECK_THROWS(integrate_periodic(rule, Eigen::VectorXd::Ones(9)));
}

}  // TEST_SUITE
