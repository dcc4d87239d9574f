#ifndef HOLES2D_LINALG_HPP
#define HOLES2D_LINALG_HPP

#include <Eigen/Dense>

namespace holes2d {

struct LinearSolveResult {
  Eigen::VectorXd x;
  double cond_estimate = 0.0;   // 1 / rcond of the LU factorization
  double residual_norm = 0.0;   // ||b - A x||_inf after refinement
};

// Dense LU solve with one step of iterative refinement; throws on a singular
// or numerically unusable factorization.
LinearSolveResult lu_solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& b);

// Factored form for reuse with several right-hand sides.
class LuSolver {
 public:
  explicit LuSolver(const Eigen::MatrixXd& A);
  Eigen::VectorXd solve(const Eigen::VectorXd& b) const;
  double cond_estimate() const { return cond_; }

 private:
  Eigen::MatrixXd A_;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
  double cond_;
};

}  // namespace holes2d

#endif
