#ifndef HOLES2D_REPRESENTATION_HPP
#define HOLES2D_REPRESENTATION_HPP

#include <vector>

#include "holes2d/geometry.hpp"
#include "holes2d/rescaled_system.hpp"

namespace holes2d {

// Superposition of single layers over mapped curves plus a constant.  A term
// contributes prefactor * integral against the reference arclength measure;
// for the shrunken holes the prefactor equals the placement scale, which
// makes the term the physical layer potential of the mapped curve.
struct LayerTerm {
  ParametrizedCurve curve = ParametrizedCurve::circle({0.0, 0.0}, 1.0);
  Placement place;
  Eigen::VectorXd density;
  double prefactor = 1.0;
};

struct HarmonicField {
  std::vector<LayerTerm> terms;
  double xi = 0.0;
};

HarmonicField build_field(const ProblemConfig& config,
                          const DensityQuadruple& densities);

// Solution field of the limit problem (the outer Dirichlet field u-tilde).
HarmonicField limit_field(const ProblemConfig& config);

Eigen::VectorXd eval_field(const HarmonicField& field,
                           const std::vector<Vec2>& targets, int eval_M = 0);
double eval_field(const HarmonicField& field, const Vec2& target,
                  int eval_M = 0);
Vec2 eval_field_gradient(const HarmonicField& field, const Vec2& target,
                         int eval_M = 0);

// Observation of the field at the cluster scale, physical x = rho1 * t:
//   u(rho1 t) = analytic(t) + correction,
//   correction = rho1 rho2 log(rho1) (F1 + F2) / (2 pi),
// with F_j the flux of the datum f_j.  The analytic part extends
// continuously to the limit pair, where it is constant in t.
struct MicroView {
  Eigen::VectorXd raw;
  Eigen::VectorXd analytic;
  double correction = 0.0;
  double log_coefficient = 0.0;  // correction = log_coefficient * log(rho1)
};
MicroView micro_view(const ProblemConfig& config, const DensityQuadruple& q,
                     const std::vector<Vec2>& ts, int eval_M = 0);

// Observation at the scale of hole j, physical x = rho1 p_j + rho1 rho2 t:
//   u(x) = analytic(t) + rho1 rho2 [log(rho1 rho2) F_j + log(rho1) F_l]/(2 pi).
struct LayerView {
  Eigen::VectorXd raw;
  Eigen::VectorXd analytic;
  double correction = 0.0;
};
LayerView layer_view(const ProblemConfig& config, const DensityQuadruple& q,
                     int j, const std::vector<Vec2>& ts, int eval_M = 0);

// One-parameter family rho1 = eta(eps) = c eps^beta, rho2 = eps / eta(eps).
struct EtaSpec {
  double c = 1.0;
  double beta = 1.0;  // in (0, 1]
  double rho1(double eps) const;
  double rho2(double eps) const;
  double r_star() const;  // limit of rho2: 0 for beta < 1, 1/c for beta = 1
};

enum class ViewKind { Macro, Micro, Layer1, Layer2 };

struct RegimeValues {
  double eps = 0.0, rho1 = 0.0, rho2 = 0.0;
  Eigen::VectorXd raw;
  double correction = 0.0;      // zero for the macroscopic view
  Eigen::VectorXd corrected;    // raw - correction
  double cond_estimate = 0.0;
};

// Solves the problem at (rho1(eps), rho2(eps)) and observes it in the
// requested view; `pts` are macroscopic points for Macro and rescaled
// coordinates t otherwise.
RegimeValues eval_epsilon_regime(const ProblemConfig& config,
                                 const EtaSpec& eta, double eps, ViewKind view,
                                 const std::vector<Vec2>& pts, int eval_M = 0);

}  // namespace holes2d

#endif
