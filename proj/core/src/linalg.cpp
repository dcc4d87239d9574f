#include "holes2d/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace holes2d {

LuSolver::LuSolver(const Eigen::MatrixXd& A) : A_(A), lu_(A) {
  const double rcond = lu_.rcond();
  if (!(rcond > 1e-15)) {
    throw std::runtime_error("linear system is numerically singular");
  }
  cond_ = 1.0 / rcond;
}

Eigen::VectorXd LuSolver::solve(const Eigen::VectorXd& b) const {
  Eigen::VectorXd x = lu_.solve(b);
  // one step of iterative refinement to push the forward error toward eps
  x += lu_.solve(b - A_ * x);
  return x;
}

LinearSolveResult lu_solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
  LuSolver solver(A);
  LinearSolveResult r;
  r.x = solver.solve(b);
  r.cond_estimate = solver.cond_estimate();
  r.residual_norm = (b - A * r.x).lpNorm<Eigen::Infinity>();
  return r;
}

}  // namespace holes2d
