#ifndef HOLES2D_POTENTIALS_HPP
#define HOLES2D_POTENTIALS_HPP

#include <Eigen/Dense>
#include <vector>

#include "holes2d/geometry.hpp"
#include "holes2d/quadrature.hpp"

namespace holes2d {

// Fundamental solution of the Laplacian in the plane and its derivatives:
//   s2(x) = (1/2pi) log|x|,  grad_s2(x) = x / (2pi |x|^2),
//   hess_s2(x) = (|x|^2 I - 2 x x^T) / (2pi |x|^4).
// All three refuse |x| below a hard floor.
double s2(const Vec2& x);
Vec2 grad_s2(const Vec2& x);
Mat2 hess_s2(const Vec2& x);

inline constexpr double kSingularFloor = 1e-14;

// Weighted boundary samples: integral of mu against arclength measure of the
// reference curve, sum_k w mu_k |x'(t_k)|.
double boundary_integral(const ParametrizedCurve& curve,
                         const PeriodicRule& rule, const Eigen::VectorXd& mu);

// Single-layer matrix of a curve scaled by `scale` > 0 against itself, with
// the logarithmic singularity split off and integrated by the rule's log
// weights.  (V mu)_i ~= int S2(x_i - x_k) mu_k dsigma on the scaled curve;
// targets and sources share the rule's nodes.
Eigen::MatrixXd single_layer_self(const ParametrizedCurve& curve, double scale,
                                  const PeriodicRule& rule);

// Adjoint double-layer matrix of a curve against itself: the principal-value
// kernel grad S2(x(t)-x(s)) . nu(t) is smooth with diagonal limit
// curvature/(4 pi); the result is invariant under positive scaling.
Eigen::MatrixXd adjoint_double_layer_self(const ParametrizedCurve& curve,
                                          const PeriodicRule& rule);

// Adjoint double-layer matrix between two disjoint mapped curves: rows are
// targets on (target, tp), columns sources on (source, sp); the normal is the
// target curve's reference normal.
Eigen::MatrixXd adjoint_double_layer_cross(const ParametrizedCurve& target,
                                           const Placement& tp,
                                           const ParametrizedCurve& source,
                                           const Placement& sp,
                                           const PeriodicRule& rule);

// Single-layer matrix between two disjoint mapped curves (plain trapezoid).
Eigen::MatrixXd single_layer_cross(const ParametrizedCurve& target,
                                   const Placement& tp,
                                   const ParametrizedCurve& source,
                                   const Placement& sp,
                                   const PeriodicRule& rule);

// Off-curve evaluation of the single-layer potential of a mapped curve.  The
// density is given at eval_M >= density-size uniform nodes after spectral
// resampling; every target must clear the guard band of five node spacings of
// the evaluation grid (physical units), else the call throws.
//
// reference variants integrate against the reference arclength |y'(s)| ds
// only; the plain variants multiply by |scale| to produce the physical
// potential on the mapped curve.
Eigen::VectorXd layer_values_reference(const ParametrizedCurve& curve,
                                       const Placement& place,
                                       const Eigen::VectorXd& mu,
                                       const std::vector<Vec2>& targets,
                                       int eval_M = 0);
std::vector<Vec2> layer_gradients_reference(const ParametrizedCurve& curve,
                                            const Placement& place,
                                            const Eigen::VectorXd& mu,
                                            const std::vector<Vec2>& targets,
                                            int eval_M = 0);
Eigen::VectorXd eval_layer_potential(const ParametrizedCurve& curve,
                                     const Placement& place,
                                     const Eigen::VectorXd& mu,
                                     const std::vector<Vec2>& targets,
                                     int eval_M = 0);
std::vector<Vec2> eval_layer_gradient(const ParametrizedCurve& curve,
                                      const Placement& place,
                                      const Eigen::VectorXd& mu,
                                      const std::vector<Vec2>& targets,
                                      int eval_M = 0);

}  // namespace holes2d

#endif
