#ifndef HOLES2D_QUADRATURE_HPP
#define HOLES2D_QUADRATURE_HPP

#include <Eigen/Dense>
#include <memory>

namespace holes2d {

// Uniform periodic trapezoid rule on [0, 2*pi) with M nodes t_k = 2*pi*k/M.
// log_weights() lazily builds the quadrature matrix R with
//   sum_k R(i,k) q(t_k)  ~=  int_0^{2pi} log(4 sin^2((t_i - s)/2)) q(s) ds,
// exact for trigonometric polynomials of degree < M/2.
class PeriodicRule {
 public:
  explicit PeriodicRule(int M);

  int size() const { return M_; }
  double weight() const { return w_; }                     // 2*pi/M
  const Eigen::VectorXd& nodes() const { return nodes_; }
  double node(int k) const { return nodes_[k]; }
  const Eigen::MatrixXd& log_weights() const;

 private:
  int M_;
  double w_;
  Eigen::VectorXd nodes_;
  mutable std::shared_ptr<const Eigen::MatrixXd> logw_;
};

double integrate_periodic(const PeriodicRule& rule,
                          const Eigen::VectorXd& samples);

// Trigonometric interpolant of M uniform periodic samples (M even); the
// Nyquist mode is represented as cos((M/2) t).
class TrigInterpolant {
 public:
  explicit TrigInterpolant(const Eigen::VectorXd& samples);

  double operator()(double t) const;
  Eigen::VectorXd resample(int M_new) const;

 private:
  Eigen::VectorXd cos_coeffs_;  // index m = 0 .. M/2
  Eigen::VectorXd sin_coeffs_;  // index m = 1 .. M/2 - 1, stored from 0
};

}  // namespace holes2d

#endif
