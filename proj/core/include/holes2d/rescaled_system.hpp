#ifndef HOLES2D_RESCALED_SYSTEM_HPP
#define HOLES2D_RESCALED_SYSTEM_HPP

#include <Eigen/Dense>

#include "holes2d/geometry.hpp"
#include "holes2d/quadrature.hpp"

namespace holes2d {

// Density unknowns of the rescaled integral system at size parameters
// (rho1, rho2): one layer per reference hole, one outer layer with zero
// arclength mean, and the additive constant xi.  The system depends
// real-analytically on the parameters, which is what the expansion module
// differentiates.
struct DensityQuadruple {
  Eigen::VectorXd theta_i1, theta_i2, theta_o;
  double xi = 0.0;
  double rho1 = 0.0, rho2 = 0.0;
  double cond_estimate = 0.0;
  double residual_norm = 0.0;
  // conservation diagnostics: arclength mean of theta_o, and the mismatch
  // between the flux integrals of theta_i_j and of the Neumann data f_j
  double theta_o_mean = 0.0;
  double flux_error1 = 0.0, flux_error2 = 0.0;
};

struct LambdaSystem {
  Eigen::MatrixXd A;
  Eigen::VectorXd rhs;
  int M = 0;
};

// Unknown ordering: [theta_i1; theta_i2; theta_o; xi], size 3M+1.  Rows:
// rescaled Neumann conditions on the two reference holes, the Dirichlet
// condition on the outer boundary, and the zero-mean constraint.  The
// assembly refuses inadmissible parameter pairs; the unchecked variant
// evaluates the same analytic formulas for arbitrary (small) parameters,
// including negative ones, as needed for difference quotients in the
// parameters.
LambdaSystem assemble_lambda(const ProblemConfig& config, double rho1,
                             double rho2);
LambdaSystem assemble_lambda_unchecked(const ProblemConfig& config,
                                       double rho1, double rho2);

DensityQuadruple solve_densities(const ProblemConfig& config, double rho1,
                                 double rho2);
DensityQuadruple solve_densities_unchecked(const ProblemConfig& config,
                                           double rho1, double rho2);

// Solution of the limit system at (0, r_star).
DensityQuadruple solve_limit_quadruple(const ProblemConfig& config);

// Data samples at the rule nodes and their flux integrals.
Eigen::VectorXd sample_hole_data(const ProblemConfig& config, int j,
                                 const PeriodicRule& rule);
Eigen::VectorXd sample_outer_data(const ProblemConfig& config,
                                  const PeriodicRule& rule);
double hole_data_integral(const ProblemConfig& config, int j);

}  // namespace holes2d

#endif
