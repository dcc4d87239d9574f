#ifndef HOLES2D_MIXED_SOLVER_HPP
#define HOLES2D_MIXED_SOLVER_HPP

#include <vector>

#include "holes2d/geometry.hpp"
#include "holes2d/potentials.hpp"

namespace holes2d {

struct MixedComponent {
  ParametrizedCurve curve = ParametrizedCurve::circle({0.0, 0.0}, 1.0);
  Placement place;  // scale must be positive here
};

// Solution of the mixed problem: Neumann data phi_c on the inner components,
// Dirichlet data gamma on the outer one.  The field is represented as
//   u = sum_c V[mu_c] + V[mu_outer] + xi
// with single layers over the mapped curves; mu_outer has zero arclength
// mean and xi is the constant that makes the Dirichlet rows solvable.
struct MixedSolution {
  std::vector<MixedComponent> inner;
  MixedComponent outer;
  std::vector<Eigen::VectorXd> mu_inner;
  Eigen::VectorXd mu_outer;
  double xi = 0.0;
  double cond_estimate = 0.0;
  double residual_norm = 0.0;  // ||A x - b||_inf of the discrete system
  int M = 0;
};

// One shared M-node rule discretizes every curve.  The Neumann rows are the
// exterior normal-derivative jump relations (1/2 I + K*) of the inner
// layers plus the smooth contributions of all other layers; the Dirichlet
// rows equate the full trace on the outer curve to gamma; one extra row
// pins the arclength mean of mu_outer to zero.
MixedSolution solve_mixed(const std::vector<MixedComponent>& inner,
                          const MixedComponent& outer,
                          const std::vector<Eigen::VectorXd>& phi,
                          const Eigen::VectorXd& gamma,
                          const PeriodicRule& rule);

Eigen::VectorXd evaluate_mixed_solution(const MixedSolution& sol,
                                        const std::vector<Vec2>& targets,
                                        int eval_M = 0);

}  // namespace holes2d

#endif
