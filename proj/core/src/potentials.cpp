#include "holes2d/potentials.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace holes2d {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_floor(double r) {
  if (!(r > kSingularFloor)) {
    throw std::domain_error("fundamental solution evaluated at the origin");
  }
}
}  // namespace

double s2(const Vec2& x) {
  const double r = x.norm();
  check_floor(r);
  return std::log(r) / kTwoPi;
}

Vec2 grad_s2(const Vec2& x) {
  const double r2 = x.squaredNorm();
  check_floor(std::sqrt(r2));
  return x / (kTwoPi * r2);
}

Mat2 hess_s2(const Vec2& x) {
  const double r2 = x.squaredNorm();
  check_floor(std::sqrt(r2));
  Mat2 h = Mat2::Identity() * r2 - 2.0 * x * x.transpose();
  return h / (kTwoPi * r2 * r2);
}

double boundary_integral(const ParametrizedCurve& curve,
                         const PeriodicRule& rule, const Eigen::VectorXd& mu) {
  double s = 0.0;
  for (int k = 0; k < rule.size(); ++k) {
    s += mu[k] * curve.speed(rule.node(k));
  }
  return rule.weight() * s;
}

Eigen::MatrixXd single_layer_self(const ParametrizedCurve& curve, double scale,
                                  const PeriodicRule& rule) {
  if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
  const int M = rule.size();
  const double w = rule.weight();
  const Eigen::MatrixXd& logw = rule.log_weights();

  std::vector<Vec2> x(M);
  Eigen::VectorXd sp(M);
  for (int k = 0; k < M; ++k) {
    x[k] = curve.point(rule.node(k));
    sp[k] = curve.speed(rule.node(k));
  }

  Eigen::MatrixXd V(M, M);
  for (int i = 0; i < M; ++i) {
    for (int k = 0; k < M; ++k) {
      // S2 on the scaled curve = (1/4pi) log(4 sin^2((t-s)/2)) + smooth rest
      double rest;
      if (i == k) {
        rest = std::log(scale * sp[i]) / kTwoPi;
      } else {
        const double sin_half = std::abs(std::sin(0.5 * (rule.node(i) - rule.node(k))));
        rest = std::log(scale * (x[i] - x[k]).norm() / (2.0 * sin_half)) / kTwoPi;
      }
      V(i, k) = (logw(i, k) / (4.0 * kPi) + w * rest) * scale * sp[k];
    }
  }
  return V;
}

Eigen::MatrixXd adjoint_double_layer_self(const ParametrizedCurve& curve,
                                          const PeriodicRule& rule) {
  const int M = rule.size();
  const double w = rule.weight();
  Eigen::MatrixXd K(M, M);
  std::vector<Vec2> x(M), nu(M);
  Eigen::VectorXd sp(M);
  for (int k = 0; k < M; ++k) {
    x[k] = curve.point(rule.node(k));
    nu[k] = curve.normal(rule.node(k));
    sp[k] = curve.speed(rule.node(k));
  }
  for (int i = 0; i < M; ++i) {
    for (int k = 0; k < M; ++k) {
      const double kernel = (i == k)
                                ? curve.curvature(rule.node(i)) / (4.0 * kPi)
                                : grad_s2(x[i] - x[k]).dot(nu[i]);
      K(i, k) = w * kernel * sp[k];
    }
  }
  return K;
}

Eigen::MatrixXd adjoint_double_layer_cross(const ParametrizedCurve& target,
                                           const Placement& tp,
                                           const ParametrizedCurve& source,
                                           const Placement& sp,
                                           const PeriodicRule& rule) {
  const int M = rule.size();
  const double w = rule.weight();
  Eigen::MatrixXd K(M, M);
  for (int i = 0; i < M; ++i) {
    const Vec2 xi = tp.offset + tp.scale * target.point(rule.node(i));
    const Vec2 nui = target.normal(rule.node(i));
    for (int k = 0; k < M; ++k) {
      const Vec2 yk = sp.offset + sp.scale * source.point(rule.node(k));
      K(i, k) =
          w * grad_s2(xi - yk).dot(nui) * sp.scale * source.speed(rule.node(k));
    }
  }
  return K;
}

Eigen::MatrixXd single_layer_cross(const ParametrizedCurve& target,
                                   const Placement& tp,
                                   const ParametrizedCurve& source,
                                   const Placement& sp,
                                   const PeriodicRule& rule) {
  const int M = rule.size();
  const double w = rule.weight();
  Eigen::MatrixXd V(M, M);
  for (int i = 0; i < M; ++i) {
    const Vec2 xi = tp.offset + tp.scale * target.point(rule.node(i));
    for (int k = 0; k < M; ++k) {
      const Vec2 yk = sp.offset + sp.scale * source.point(rule.node(k));
      V(i, k) = w * s2(xi - yk) * sp.scale * source.speed(rule.node(k));
    }
  }
  return V;
}

namespace {

struct EvalGrid {
  PeriodicRule rule;
  Eigen::VectorXd mu;        // density resampled to the grid
  std::vector<Vec2> points;  // mapped source points
  Eigen::VectorXd speed;     // reference speeds
  double band;               // physical guard band
};

EvalGrid make_eval_grid(const ParametrizedCurve& curve, const Placement& place,
                        const Eigen::VectorXd& mu, int eval_M) {
  const int M0 = static_cast<int>(mu.size());
  if (eval_M == 0) eval_M = M0;
  if (eval_M < M0 || eval_M % M0 != 0) {
    throw std::invalid_argument(
        "evaluation grid must be a multiple refinement of the density grid");
  }
  EvalGrid g{PeriodicRule(eval_M),
             eval_M == M0 ? mu : TrigInterpolant(mu).resample(eval_M),
             {}, {}, 0.0};
  g.points.resize(eval_M);
  g.speed.resize(eval_M);
  for (int k = 0; k < eval_M; ++k) {
    g.points[k] = place.offset + place.scale * curve.point(g.rule.node(k));
    g.speed[k] = curve.speed(g.rule.node(k));
  }
  g.band = guard_delta(curve, eval_M, place.scale);
  return g;
}

void check_band(const EvalGrid& g, const Vec2& x) {
  double d = std::numeric_limits<double>::infinity();
  for (const Vec2& p : g.points) d = std::min(d, (p - x).norm());
  if (d <= std::max(g.band, kSingularFloor)) {
    throw std::domain_error("evaluation point inside the quadrature guard band");
  }
}

}  // namespace

Eigen::VectorXd layer_values_reference(const ParametrizedCurve& curve,
                                       const Placement& place,
                                       const Eigen::VectorXd& mu,
                                       const std::vector<Vec2>& targets,
                                       int eval_M) {
  const EvalGrid g = make_eval_grid(curve, place, mu, eval_M);
  Eigen::VectorXd out(static_cast<Eigen::Index>(targets.size()));
  for (std::size_t j = 0; j < targets.size(); ++j) {
    check_band(g, targets[j]);
    double v = 0.0;
    for (int k = 0; k < g.rule.size(); ++k) {
      v += s2(targets[j] - g.points[k]) * g.mu[k] * g.speed[k];
    }
    out[static_cast<Eigen::Index>(j)] = g.rule.weight() * v;
  }
  return out;
}

std::vector<Vec2> layer_gradients_reference(const ParametrizedCurve& curve,
                                            const Placement& place,
                                            const Eigen::VectorXd& mu,
                                            const std::vector<Vec2>& targets,
                                            int eval_M) {
  const EvalGrid g = make_eval_grid(curve, place, mu, eval_M);
  std::vector<Vec2> out(targets.size());
  for (std::size_t j = 0; j < targets.size(); ++j) {
    check_band(g, targets[j]);
    Vec2 v{0.0, 0.0};
    for (int k = 0; k < g.rule.size(); ++k) {
      v += grad_s2(targets[j] - g.points[k]) * g.mu[k] * g.speed[k];
    }
    out[j] = g.rule.weight() * v;
  }
  return out;
}

Eigen::VectorXd eval_layer_potential(const ParametrizedCurve& curve,
                                     const Placement& place,
                                     const Eigen::VectorXd& mu,
                                     const std::vector<Vec2>& targets,
                                     int eval_M) {
  return std::abs(place.scale) *
         layer_values_reference(curve, place, mu, targets, eval_M);
}

std::vector<Vec2> eval_layer_gradient(const ParametrizedCurve& curve,
                                      const Placement& place,
                                      const Eigen::VectorXd& mu,
                                      const std::vector<Vec2>& targets,
                                      int eval_M) {
  auto out = layer_gradients_reference(curve, place, mu, targets, eval_M);
  for (Vec2& v : out) v *= std::abs(place.scale);
  return out;
}

}  // namespace holes2d
