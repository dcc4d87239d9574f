#ifndef HOLES2D_EXPANSION_HPP
#define HOLES2D_EXPANSION_HPP

#include <Eigen/Dense>
#include <vector>

#include "holes2d/geometry.hpp"
#include "holes2d/representation.hpp"
#include "holes2d/rescaled_system.hpp"

namespace holes2d {

// Taylor data of the density quadruple at (rho1, rho2) = (0, 0), obtained by
// differentiating the integral system rather than by difference quotients.
// With F_j the flux of f_j and A the Hessian at the cluster point of the
// unperturbed field u0, the nonzero derivatives through the orders used by
// the two-term expansion are
//   (1/2 I + K*_j) d_rho1 theta_j = -(A p_j) . nu_j,
//   (1/2 I + K*_j) d_rho2 theta_j = grad S2(p_l - p_j) . nu_j F_l,
//   V d11 theta_o + d11 xi = -S2(F1 + F2),        mean-free,
//   V d21 theta_o + d21 xi = 2 grad S2 . (p1 F1 + p2 F2),  mean-free,
// where d11 = d^2/(d rho1 d rho2) and d21 = d^3/(d rho1^2 d rho2); the pure
// first and second parameter derivatives of (theta_o, xi) vanish, as does
// d^3/(d rho1 d rho2^2).  Pairing the d21 equation with the equilibrium
// density of the outer curve shows d21 xi = 0 as well (its computed value is
// kept as a consistency diagnostic).
struct ExpansionCoefficients {
  DensityQuadruple base;  // solution of the system at (0, 0)
  double flux1 = 0.0, flux2 = 0.0;
  Vec2 grad_u0 = Vec2::Zero();  // gradient of u0 at the cluster point
  Mat2 hess_u0 = Mat2::Zero();  // Hessian of u0 at the cluster point
  Eigen::VectorXd theta1_d10, theta2_d10;  // d/d rho1 of the hole densities
  Eigen::VectorXd theta1_d01, theta2_d01;  // d/d rho2 of the hole densities
  Eigen::VectorXd theta_o_11;
  double xi_11 = 0.0;
  Eigen::VectorXd theta_o_21;
  double xi_21 = 0.0;
  int M = 0;
};

ExpansionCoefficients compute_expansion(const ProblemConfig& config);

// Harmonic fields generated by the derivative densities of the outer layer.
HarmonicField order_11_field(const ProblemConfig& config,
                             const ExpansionCoefficients& c);
HarmonicField order_21_field(const ProblemConfig& config,
                             const ExpansionCoefficients& c);

// Two-term macroscopic approximation
//   u0(x) + rho1 rho2 [u11(x) + S2(x)(F1 + F2)]
//         + rho1^2 rho2 [u21(x)/2 - grad S2(x) . (p1 F1 + p2 F2)]
// valid at targets away from the cluster point and the outer boundary.
Eigen::VectorXd eval_expansion(const ProblemConfig& config,
                               const ExpansionCoefficients& c, double rho1,
                               double rho2, const std::vector<Vec2>& targets,
                               int eval_M = 0);
double eval_expansion(const ProblemConfig& config,
                      const ExpansionCoefficients& c, double rho1, double rho2,
                      const Vec2& target, int eval_M = 0);

// Differences between the analytic derivatives above and Richardson-
// extrapolated central difference quotients of the solved densities.  Entries
// for coefficients that should vanish report the difference-quotient size
// against the norm of the order-matched nonzero coefficient.
struct DerivativeChecks {
  double theta1_d10 = 0.0, theta2_d10 = 0.0;
  double theta1_d01 = 0.0, theta2_d01 = 0.0;
  double theta_o_d10 = 0.0, theta_o_d01 = 0.0;  // expected to vanish
  double theta_o_11 = 0.0, xi_11 = 0.0;
  double theta_o_21 = 0.0;
  double xi_21 = 0.0;       // expected to vanish
  double theta_o_12 = 0.0;  // d^3/(d rho1 d rho2^2), expected to vanish
  double max_error() const;
};

DerivativeChecks finite_difference_checks(const ProblemConfig& config,
                                          const ExpansionCoefficients& c,
                                          double h = 1e-2);

// Largest informative audit entry: a relative error is counted only when the
// exact coefficient is nontrivial for the given data (for example, the rho2
// derivative of theta_1 vanishes identically when f_2 has zero flux, so its
// entry is floor-dominated noise); the vanishing-type entries always count.
double gated_max_error(const DerivativeChecks& checks,
                       const ExpansionCoefficients& c);

}  // namespace holes2d

#endif
