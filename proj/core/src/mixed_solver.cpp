#include "holes2d/mixed_solver.hpp"

#include <stdexcept>

#include "holes2d/linalg.hpp"

namespace holes2d {

MixedSolution solve_mixed(const std::vector<MixedComponent>& inner,
                          const MixedComponent& outer,
                          const std::vector<Eigen::VectorXd>& phi,
                          const Eigen::VectorXd& gamma,
                          const PeriodicRule& rule) {
  const int M = rule.size();
  const int C = static_cast<int>(inner.size());
  if (static_cast<int>(phi.size()) != C) {
    throw std::invalid_argument("one Neumann datum per inner component");
  }
  for (const auto& p : phi) {
    if (p.size() != M) throw std::invalid_argument("datum size mismatch");
  }
  if (gamma.size() != M) throw std::invalid_argument("datum size mismatch");
  if (!(outer.place.scale > 0.0)) {
    throw std::invalid_argument("outer scale must be positive");
  }
  for (const auto& c : inner) {
    if (!(c.place.scale > 0.0)) {
      throw std::invalid_argument("inner scales must be positive");
    }
  }

  const int N = (C + 1) * M + 1;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
  Eigen::VectorXd b(N);

  auto block = [M](int c) { return c * M; };
  const int outer_col = C * M;
  const int xi_col = N - 1;

  for (int c = 0; c < C; ++c) {
    // exterior Neumann trace of the full field on inner component c
    A.block(block(c), block(c), M, M) =
        0.5 * Eigen::MatrixXd::Identity(M, M) +
        adjoint_double_layer_self(inner[c].curve, rule);
    for (int d = 0; d < C; ++d) {
      if (d == c) continue;
      A.block(block(c), block(d), M, M) = adjoint_double_layer_cross(
          inner[c].curve, inner[c].place, inner[d].curve, inner[d].place, rule);
    }
    A.block(block(c), outer_col, M, M) = adjoint_double_layer_cross(
        inner[c].curve, inner[c].place, outer.curve, outer.place, rule);
    b.segment(block(c), M) = phi[c];
  }

  // Dirichlet trace of the full field on the outer component
  for (int d = 0; d < C; ++d) {
    A.block(outer_col, block(d), M, M) = single_layer_cross(
        outer.curve, outer.place, inner[d].curve, inner[d].place, rule);
  }
  A.block(outer_col, outer_col, M, M) =
      single_layer_self(outer.curve, outer.place.scale, rule);
  A.block(outer_col, xi_col, M, 1).setOnes();
  b.segment(outer_col, M) = gamma;

  // arclength mean of the outer density vanishes
  for (int k = 0; k < M; ++k) {
    A(N - 1, outer_col + k) =
        rule.weight() * outer.place.scale * outer.curve.speed(rule.node(k));
  }
  b[N - 1] = 0.0;

  const LinearSolveResult r = lu_solve(A, b);

  MixedSolution sol;
  sol.inner = inner;
  sol.outer = outer;
  sol.mu_inner.reserve(C);
  for (int c = 0; c < C; ++c) sol.mu_inner.push_back(r.x.segment(block(c), M));
  sol.mu_outer = r.x.segment(outer_col, M);
  sol.xi = r.x[xi_col];
  sol.cond_estimate = r.cond_estimate;
  sol.residual_norm = r.residual_norm;
  sol.M = M;
  return sol;
}

Eigen::VectorXd evaluate_mixed_solution(const MixedSolution& sol,
                                        const std::vector<Vec2>& targets,
                                        int eval_M) {
  Eigen::VectorXd u = Eigen::VectorXd::Constant(
      static_cast<Eigen::Index>(targets.size()), sol.xi);
  for (std::size_t c = 0; c < sol.inner.size(); ++c) {
    u += eval_layer_potential(sol.inner[c].curve, sol.inner[c].place,
                              sol.mu_inner[c], targets, eval_M);
  }
  u += eval_layer_potential(sol.outer.curve, sol.outer.place, sol.mu_outer,
                            targets, eval_M);
  return u;
}

}  // namespace holes2d
