#include "holes2d/orderfit.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace holes2d {

OrderFit fit_order(const std::vector<double>& h,
                   const std::vector<double>& err) {
  if (h.size() != err.size() || h.size() < 2)
    throw std::invalid_argument("fit_order needs >= 2 matching samples");
  const int n = static_cast<int>(h.size());
  Eigen::MatrixXd X(n, 2);
  Eigen::VectorXd y(n);
  OrderFit fit;
  for (int i = 0; i < n; ++i) {
    if (!(h[i] > 0.0)) throw std::invalid_argument("fit_order needs h > 0");
    double e = err[i];
    if (!(e > 1e-14)) {
      e = 1e-14;
      fit.clipped = true;
    }
    X(i, 0) = std::log(h[i]);
    X(i, 1) = 1.0;
    y[i] = std::log(e);
  }
  const Eigen::Vector2d beta = X.colPivHouseholderQr().solve(y);
  fit.slope = beta[0];
  fit.intercept = beta[1];
  return fit;
}

}  // namespace holes2d
