#include <cmath>
#include <numbers>

#include "doctest.h"
#include "holes2d/potentials.hpp"

using namespace holes2d;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

ParametrizedCurve kite() {
  // classic kite-shaped test contour
  return ParametrizedCurve::trig(0.0, {0.75, 0.3}, {0.0, 0.0}, 0.0,
                                 {0.0, 0.0}, {1.0, 0.0});
}
}  // namespace

TEST_SUITE("potentials") {

TEST_CASE("fundamental solution values and derivatives") {
  CHECK(s2({1.0, 0.0}) == doctest::Approx(0.0).epsilon(1e-16));
  CHECK(s2({std::exp(1.0), 0.0}) == doctest::Approx(1.0 / kTwoPi).epsilon(1e-14));
  CHECK((grad_s2({2.0, 0.0}) - Vec2{1.0 / (4.0 * kPi), 0.0}).norm() < 1e-15);

  const Vec2 x{0.7, -1.3};
  const Mat2 h = hess_s2(x);
  CHECK(std::abs(h.trace()) < 1e-14);                      // harmonicity
  CHECK(std::abs(h(0, 1) - h(1, 0)) < 1e-16);              // symmetry
  CHECK((grad_s2(-x) + grad_s2(x)).norm() < 1e-15);        // odd
  CHECK((hess_s2(-x) - h).lpNorm<Eigen::Infinity>() < 1e-15);  // even
  CHECK((grad_s2(3.0 * x) - grad_s2(x) / 3.0).norm() < 1e-15);

  // finite-difference cross-check of the Hessian
  const double d = 1e-5;
  for (int a = 0; a < 2; ++a) {
    Vec2 e = Vec2::Zero();
    e[a] = d;
    const Vec2 fd = (grad_s2(x + e) - grad_s2(x - e)) / (2.0 * d);
    CHECK((fd - h.col(a)).norm() < 1e-9);
  }

  CHECK_THROWS(s2({0.0, 0.0}));
  CHECK_THROWS(grad_s2({1e-15, 0.0}));
  CHECK_THROWS(hess_s2({0.0, 1e-15}));
}

TEST_CASE("single layer on the unit circle: capacity and first mode") {
  const auto c = ParametrizedCurve::circle({0.0, 0.0}, 1.0);
  const PeriodicRule rule(64);
  const Eigen::MatrixXd V = single_layer_self(c, 1.0, rule);

  // V 1 = R log R = 0 for the unit circle
  CHECK((V * Eigen::VectorXd::Ones(64)).lpNorm<Eigen::Infinity>() < 1e-13);

  Eigen::VectorXd cosd(64), expect(64);
  for (int k = 0; k < 64; ++k) {
    cosd[k] = std::cos(rule.node(k));
    expect[k] = -0.5 * std::cos(rule.node(k));
  }
  CHECK(((V * cosd) - expect).lpNorm<Eigen::Infinity>() < 1e-13);
}

TEST_CASE("single layer scaling: two routes to the same mapped circle") {
  const PeriodicRule rule(64);
  const double R = 0.5;
  const Eigen::MatrixXd Va =
      single_layer_self(ParametrizedCurve::circle({0.0, 0.0}, R), 1.0, rule);
  const Eigen::MatrixXd Vb =
      single_layer_self(ParametrizedCurve::circle({0.0, 0.0}, 1.0), R, rule);
  CHECK((Va - Vb).lpNorm<Eigen::Infinity>() < 1e-14);
  const Eigen::VectorXd cap = Va * Eigen::VectorXd::Ones(64);
  for (int k = 0; k < 64; ++k) {
    CHECK(cap[k] == doctest::Approx(R * std::log(R)).epsilon(1e-13));
  }
}

TEST_CASE("single layer on smooth curves against a fine reference") {
  for (const auto& curve :
       {ParametrizedCurve::ellipse({0.0, 0.0}, 1.0, 0.6), kite()}) {
    const PeriodicRule coarse(128), fine(4096);
    Eigen::VectorXd mu_c(128), mu_f(4096);
    for (int k = 0; k < 128; ++k) mu_c[k] = std::exp(std::cos(coarse.node(k)));
    for (int k = 0; k < 4096; ++k) mu_f[k] = std::exp(std::cos(fine.node(k)));
    const Eigen::VectorXd vc =
        single_layer_self(curve, 0.7, coarse) * mu_c;
    const Eigen::VectorXd vf = single_layer_self(curve, 0.7, fine) * mu_f;
    for (int k = 0; k < 128; ++k) {
      CHECK(vc[k] == doctest::Approx(vf[k * 32]).epsilon(1e-12));
    }
  }
}

TEST_CASE("adjoint double layer on a circle is rank-deducible by hand") {
  // kernel is identically 1/(4 pi R); K* 1 = 1/2
  const double R = 0.7;
  const auto c = ParametrizedCurve::circle({0.0, 0.0}, R);
  const PeriodicRule rule(32);
  const Eigen::MatrixXd K = adjoint_double_layer_self(c, rule);
  for (int i = 0; i < 32; ++i) {
    for (int k = 0; k < 32; ++k) {
      CHECK(K(i, k) ==
            doctest::Approx(rule.weight() / (4.0 * kPi)).epsilon(1e-13));
    }
  }
  CHECK(((K * Eigen::VectorXd::Ones(32)).array() - 0.5).abs().maxCoeff() < 1e-13);
}

TEST_CASE("adjoint double layer: dual Gauss identity on general curves") {
  // int (K* theta) dsigma = (1/2) int theta dsigma for every density, i.e.
  // the arclength-weighted column sums of the matrix are half the weights
  const PeriodicRule rule(128);
  for (const auto& curve :
       {ParametrizedCurve::ellipse({0.2, -0.1}, 1.0, 0.6), kite()}) {
    const Eigen::MatrixXd K = adjoint_double_layer_self(curve, rule);
    Eigen::VectorXd wsp(128);
    for (int k = 0; k < 128; ++k) {
      wsp[k] = rule.weight() * curve.speed(rule.node(k));
    }
    const Eigen::VectorXd colsum = K.transpose() * wsp;
    CHECK((colsum - 0.5 * wsp).lpNorm<Eigen::Infinity>() < 1e-12);
  }
}

TEST_CASE("on-curve Gauss identity with the curvature diagonal") {
  // PV int grad S2(z - y).nu(z) dsigma(z) = 1/2 for y on the curve; the
  // diagonal limit of the kernel is curvature / (4 pi)
  const PeriodicRule rule(128);
  for (const auto& curve :
       {ParametrizedCurve::ellipse({0.2, -0.1}, 1.0, 0.6), kite()}) {
    for (int k : {0, 17, 64}) {
      double s = 0.0;
      for (int i = 0; i < 128; ++i) {
        const double kernel =
            (i == k) ? curve.curvature(rule.node(k)) / (4.0 * kPi)
                     : grad_s2(curve.point(rule.node(i)) -
                               curve.point(rule.node(k)))
                           .dot(curve.normal(rule.node(i)));
        s += rule.weight() * kernel * curve.speed(rule.node(i));
      }
      CHECK(s == doctest::Approx(0.5).epsilon(1e-12));
    }
  }
}

TEST_CASE("flux identity classifies points inside and outside") {
  const PeriodicRule rule(128);
  for (const auto& curve :
       {ParametrizedCurve::circle({0.0, 0.0}, 1.0),
        ParametrizedCurve::ellipse({0.0, 0.0}, 1.0, 0.6), kite()}) {
    auto flux = [&](const Vec2& x) {
      double s = 0.0;
      for (int k = 0; k < rule.size(); ++k) {
        const double t = rule.node(k);
        s += grad_s2(curve.point(t) - x).dot(curve.normal(t)) * curve.speed(t);
      }
      return rule.weight() * s;
    };
    CHECK(flux({0.05, 0.1}) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(flux({2.5, 1.0})) < 1e-10);
  }
}

TEST_CASE("cross operators against closed forms for a distant disc") {
  // source: circle of radius 0.1 centered at (5,0), realized as a placement;
  // single layer of density 1 is 0.1 log|x - c|, and its normal derivative on
  // the target curve is 0.1 (x - c).nu / |x - c|^2.
  const auto target = ParametrizedCurve::ellipse({0.0, 0.0}, 1.0, 0.6);
  const auto src = ParametrizedCurve::circle({0.0, 0.0}, 1.0);
  const Placement sp{{5.0, 0.0}, 0.1};
  const Placement tp{};
  const PeriodicRule rule(64);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(64);
  const Eigen::VectorXd v = single_layer_cross(target, tp, src, sp, rule) * ones;
  const Eigen::VectorXd dv =
      adjoint_double_layer_cross(target, tp, src, sp, rule) * ones;
  for (int i = 0; i < 64; ++i) {
    const Vec2 x = target.point(rule.node(i));
    const Vec2 r = x - Vec2{5.0, 0.0};
    CHECK(v[i] == doctest::Approx(0.1 * std::log(r.norm())).epsilon(1e-14));
    CHECK(dv[i] == doctest::Approx(0.1 * r.dot(target.normal(rule.node(i))) /
                                   r.squaredNorm()).epsilon(1e-13));
  }
}

TEST_CASE("off-curve evaluation of the single layer: closed forms") {
  const auto c = ParametrizedCurve::circle({0.0, 0.0}, 1.0);
  const PeriodicRule rule(128);
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(128), cosd(128);
  for (int k = 0; k < 128; ++k) cosd[k] = std::cos(rule.node(k));

  const std::vector<Vec2> far{{2.0, 0.0}, {0.0, -3.0}, {0.3, 0.2}};
  const Eigen::VectorXd v = eval_layer_potential(c, {}, ones, far);
  CHECK(v[0] == doctest::Approx(std::log(2.0)).epsilon(1e-13));
  CHECK(v[1] == doctest::Approx(std::log(3.0)).epsilon(1e-13));
  CHECK(std::abs(v[2]) < 1e-13);  // R log R = 0 inside the unit circle

  const auto gv = eval_layer_gradient(c, {}, ones, {{2.0, 0.0}});
  CHECK((gv[0] - Vec2{0.5, 0.0}).norm() < 1e-13);

  // first mode: v(r, theta) = -(r/2) cos(theta) inside
  const Eigen::VectorXd vc = eval_layer_potential(c, {}, cosd, {{0.3, 0.2}});
  CHECK(vc[0] == doctest::Approx(-0.15).epsilon(1e-13));
}

TEST_CASE("off-curve evaluation respects placements and |scale|") {
  const auto c = ParametrizedCurve::circle({0.0, 0.0}, 1.0);
  const PeriodicRule rule(64);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(64);
  const Placement pl{{0.4, 0.1}, 0.05};
  const Vec2 x{1.5, -0.2};
  const double expect = 0.05 * std::log((x - pl.offset).norm());
  CHECK(eval_layer_potential(c, pl, ones, {x})[0] ==
        doctest::Approx(expect).epsilon(1e-13));
  CHECK(layer_values_reference(c, pl, ones, {x})[0] ==
        doctest::Approx(expect / 0.05).epsilon(1e-13));
  // collapsed placement: the layer degenerates to a point source
  const Placement collapsed{{0.4, 0.1}, 0.0};
  CHECK(layer_values_reference(c, collapsed, ones, {x})[0] ==
        doctest::Approx(kTwoPi * s2(x - collapsed.offset)).epsilon(1e-13));
  CHECK(eval_layer_potential(c, collapsed, ones, {x})[0] == 0.0);
}

TEST_CASE("guard band refuses near-curve targets unless the grid is refined") {
  const auto c = ParametrizedCurve::circle({0.0, 0.0}, 1.0);
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(128);
  const Vec2 near{1.0 + 1e-3, 0.0};
  CHECK_THROWS(eval_layer_potential(c, {}, ones, {near}));
  // refining the evaluation grid shrinks the band below the distance
  const Eigen::VectorXd v = eval_layer_potential(c, {}, ones, {near}, 32768);
  CHECK(v[0] == doctest::Approx(std::log(1.0 + 1e-3)).epsilon(1e-11));
}

TEST_CASE("upsampled evaluation matches the analytic continuation") {
  // density cos(t), point at distance 1e-3: spectral resampling of the
  // coarse density keeps full accuracy
  const auto c = ParametrizedCurve::circle({0.0, 0.0}, 1.0);
  const PeriodicRule rule(128);
  Eigen::VectorXd cosd(128);
  for (int k = 0; k < 128; ++k) cosd[k] = std::cos(rule.node(k));
  const double r = 1.0 - 1e-3;
  const Eigen::VectorXd v =
      eval_layer_potential(c, {}, cosd, {{r, 0.0}}, 32768);
  CHECK(v[0] == doctest::Approx(-0.5 * r).epsilon(1e-11));
}

TEST_CASE("jump relations for the normal derivative across the boundary") {
  const auto c = ParametrizedCurve::circle({0.0, 0.0}, 1.0);
  const int M = 512;
  const PeriodicRule rule(M);
  Eigen::VectorXd mu(M);
  for (int k = 0; k < M; ++k) {
    mu[k] = 1.0 + std::cos(rule.node(k)) + 0.3 * std::sin(2.0 * rule.node(k));
  }
  const Eigen::VectorXd kmu = adjoint_double_layer_self(c, rule) * mu;
  const double d = 1e-3;
  for (int i : {0, 37, 200, 411}) {
    const double t = rule.node(i);
    const Vec2 nu = c.normal(t);
    const Vec2 xout = c.point(t) + d * nu;
    const Vec2 xin = c.point(t) - d * nu;
    const double dout =
        eval_layer_gradient(c, {}, mu, {xout}, 32768)[0].dot(nu);
    const double din = eval_layer_gradient(c, {}, mu, {xin}, 32768)[0].dot(nu);
    CHECK(std::abs(dout - (0.5 * mu[i] + kmu[i])) < 1e-2);
    CHECK(std::abs(din - (-0.5 * mu[i] + kmu[i])) < 1e-2);
    CHECK(std::abs((dout - din) - mu[i]) < 2e-2);
  }
}

}  // TEST_SUITE
