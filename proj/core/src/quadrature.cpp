#include "holes2d/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace holes2d {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

PeriodicRule::PeriodicRule(int M) : M_(M), w_(kTwoPi / M), nodes_(M) {
  if (M < 4 || M % 2 != 0) {
    throw std::invalid_argument("node count must be even and at least 4");
  }
  for (int k = 0; k < M; ++k) nodes_[k] = kTwoPi * k / M;
}

const Eigen::MatrixXd& PeriodicRule::log_weights() const {
  if (!logw_) {
    // circulant: entry depends only on the node difference t_i - t_k
    Eigen::VectorXd r(M_);
    for (int d = 0; d < M_; ++d) {
      const double td = kTwoPi * d / M_;
      double s = 0.0;
      for (int m = 1; m < M_ / 2; ++m) s += std::cos(m * td) / m;
      r[d] = -(2.0 * kTwoPi / M_) * s -
             (kTwoPi / (M_ * static_cast<double>(M_))) *
                 std::cos(0.5 * M_ * td);
    }
    auto w = std::make_shared<Eigen::MatrixXd>(M_, M_);
    for (int i = 0; i < M_; ++i) {
      for (int k = 0; k < M_; ++k) (*w)(i, k) = r[(i - k + M_) % M_];
    }
    logw_ = std::move(w);
  }
  return *logw_;
}

double integrate_periodic(const PeriodicRule& rule,
                          const Eigen::VectorXd& samples) {
  if (samples.size() != rule.size()) {
    throw std::invalid_argument("sample count does not match rule");
  }
  return rule.weight() * samples.sum();
}

TrigInterpolant::TrigInterpolant(const Eigen::VectorXd& samples) {
  const int M = static_cast<int>(samples.size());
  if (M < 4 || M % 2 != 0) {
    throw std::invalid_argument("sample count must be even and at least 4");
  }
  const int half = M / 2;
  cos_coeffs_.setZero(half + 1);
  sin_coeffs_.setZero(std::max(half - 1, 0));
  for (int k = 0; k < M; ++k) {
    const double t = kTwoPi * k / M;
    cos_coeffs_[0] += samples[k];
    for (int m = 1; m < half; ++m) {
      cos_coeffs_[m] += 2.0 * samples[k] * std::cos(m * t);
      sin_coeffs_[m - 1] += 2.0 * samples[k] * std::sin(m * t);
    }
    cos_coeffs_[half] += samples[k] * std::cos(half * t);
  }
  cos_coeffs_ /= M;
  sin_coeffs_ /= M;
}

double TrigInterpolant::operator()(double t) const {
  const int half = static_cast<int>(cos_coeffs_.size()) - 1;
  double v = cos_coeffs_[0];
  for (int m = 1; m < half; ++m) {
    v += cos_coeffs_[m] * std::cos(m * t) + sin_coeffs_[m - 1] * std::sin(m * t);
  }
  v += cos_coeffs_[half] * std::cos(half * t);
  return v;
}

Eigen::VectorXd TrigInterpolant::resample(int M_new) const {
  Eigen::VectorXd out(M_new);
  for (int k = 0; k < M_new; ++k) out[k] = (*this)(kTwoPi * k / M_new);
  return out;
}

}  // namespace holes2d
