#include "holes2d/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "holes2d/csv.hpp"
#include "holes2d/expansion.hpp"
#include "holes2d/mixed_solver.hpp"
#include "holes2d/orderfit.hpp"
#include "holes2d/potentials.hpp"
#include "holes2d/quadrature.hpp"
#include "holes2d/representation.hpp"
#include "holes2d/rescaled_system.hpp"

namespace holes2d {

namespace {

constexpr double kRho1 = 0.2;
constexpr double kRho2 = 0.3;

ValidationCase at_most(const std::string& name, double measured,
                       double bound) {
  return {name, measured, bound, true, measured <= bound};
}

ValidationCase at_least(const std::string& name, double measured,
                        double bound) {
  return {name, measured, bound, false, measured >= bound};
}

double interior_gauss_flux(const ParametrizedCurve& curve,
                           const PeriodicRule& rule, const Vec2& x) {
  double s = 0.0;
  for (int k = 0; k < rule.size(); ++k) {
    const double t = rule.node(k);
    s += grad_s2(curve.point(t) - x).dot(curve.normal(t)) * curve.speed(t);
  }
  return rule.weight() * s;
}

double eigenpair_residual(const PeriodicRule& rule) {
  const auto circle = ParametrizedCurve::circle({0.0, 0.0}, 1.0);
  const Eigen::MatrixXd V = single_layer_self(circle, 1.0, rule);
  Eigen::VectorXd c(rule.size());
  for (int k = 0; k < rule.size(); ++k) c[k] = std::cos(rule.node(k));
  return (V * c + 0.5 * c).lpNorm<Eigen::Infinity>();
}

double equivalence_error(const ProblemConfig& cfg, const PeriodicRule& rule,
                         const DensityQuadruple& q) {
  const double s = kRho1 * kRho2;
  const MixedComponent mh1{cfg.hole1, Placement{kRho1 * cfg.p1, s}};
  const MixedComponent mh2{cfg.hole2, Placement{kRho1 * cfg.p2, s}};
  const MixedComponent mo{cfg.outer, Placement{}};
  const MixedSolution sol = solve_mixed(
      {mh1, mh2}, mo,
      {sample_hole_data(cfg, 1, rule), sample_hole_data(cfg, 2, rule)},
      sample_outer_data(cfg, rule), rule);
  double e = (sol.mu_inner[0] - q.theta_i1).lpNorm<Eigen::Infinity>();
  e = std::max(e, (sol.mu_inner[1] - q.theta_i2).lpNorm<Eigen::Infinity>());
  e = std::max(e, (sol.mu_outer - q.theta_o).lpNorm<Eigen::Infinity>());
  return std::max(e, std::abs(sol.xi - q.xi));
}

// flux of the field through an origin-centered circle strictly between the
// mapped holes and the outer boundary
double enclosing_flux_error(const ProblemConfig& cfg,
                            const HarmonicField& field, double expected) {
  double min_outer = std::numeric_limits<double>::infinity();
  for (const Vec2& y : cfg.outer.dense_points())
    min_outer = std::min(min_outer, y.norm());
  double extent = 0.0;
  const double s = kRho1 * kRho2;
  for (int j = 1; j <= 2; ++j) {
    const ParametrizedCurve& hole = (j == 1) ? cfg.hole1 : cfg.hole2;
    const Vec2& p = (j == 1) ? cfg.p1 : cfg.p2;
    double max_hole = 0.0;
    for (const Vec2& y : hole.dense_points())
      max_hole = std::max(max_hole, y.norm());
    extent = std::max(extent, kRho1 * p.norm() + s * max_hole);
  }
  const double r = std::max(2.0 * extent, 0.4 * min_outer);
  if (r > 0.8 * min_outer)
    throw std::invalid_argument(
        "validation: no circle separates the holes from the outer boundary");
  const int n = 256;
  double flux = 0.0;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n;
    const Vec2 x{r * std::cos(t), r * std::sin(t)};
    flux += eval_field_gradient(field, x, 1024).dot(x) / r;
  }
  flux *= 2.0 * std::numbers::pi * r / n;
  return std::abs(flux - expected);
}

double micro_layer_error(const ProblemConfig& cfg, const DensityQuadruple& q) {
  const Vec2 t{0.1, 1.5};
  const LayerView lv = layer_view(cfg, q, 1, {t}, 1024);
  const MicroView mv = micro_view(cfg, q, {cfg.p1 + kRho2 * t}, 1024);
  return std::abs(mv.raw[0] - lv.raw[0]);
}

double remainder_order(const ProblemConfig& cfg,
                       const ExpansionCoefficients& c) {
  std::vector<Vec2> pts;
  for (double t : {0.4, 2.5, 4.3}) pts.push_back(0.62 * cfg.outer.point(t));
  const std::vector<double> ss{0.1, 0.07, 0.05};
  std::vector<double> errs;
  for (double s : ss) {
    const DensityQuadruple q = solve_densities(cfg, s, s);
    const Eigen::VectorXd u = eval_field(build_field(cfg, q), pts, 1024);
    const Eigen::VectorXd two = eval_expansion(cfg, c, s, s, pts, 1024);
    errs.push_back((u - two).lpNorm<Eigen::Infinity>());
  }
  return fit_order(ss, errs).slope;
}

}  // namespace

ValidationSuite run_validation_suite(const ProblemConfig& config) {
  ValidationSuite suite;
  const PeriodicRule rule(config.M);

  suite.cases.push_back(at_most(
      "interior-gauss-flux",
      std::abs(interior_gauss_flux(config.outer, rule, {0.0, 0.0}) - 1.0),
      1e-10));
  suite.cases.push_back(
      at_most("single-layer-eigenpair", eigenpair_residual(rule), 1e-12));

  const DensityQuadruple q = solve_densities(config, kRho1, kRho2);
  suite.cases.push_back(
      at_most("system-equivalence", equivalence_error(config, rule, q), 1e-8));
  suite.cases.push_back(at_most(
      "flux-conservation",
      std::max({std::abs(q.flux_error1), std::abs(q.flux_error2),
                std::abs(q.theta_o_mean)}),
      1e-10));

  const double expected =
      kRho1 * kRho2 *
      (hole_data_integral(config, 1) + hole_data_integral(config, 2));
  suite.cases.push_back(at_most(
      "enclosing-circle-flux",
      enclosing_flux_error(config, build_field(config, q), expected), 1e-9));
  suite.cases.push_back(
      at_most("micro-layer-consistency", micro_layer_error(config, q), 1e-12));

  const ExpansionCoefficients c = compute_expansion(config);
  suite.cases.push_back(at_most(
      "expansion-fd-audit",
      gated_max_error(finite_difference_checks(config, c, 1e-2), c), 1e-4));
  suite.cases.push_back(
      at_least("two-term-remainder-order", remainder_order(config, c), 3.5));

  suite.all_pass = std::all_of(suite.cases.begin(), suite.cases.end(),
                               [](const ValidationCase& v) { return v.pass; });
  return suite;
}

std::string validation_csv(const ValidationSuite& suite) {
  CsvWriter csv({"name", "measured", "bound", "sense", "pass"});
  for (const ValidationCase& v : suite.cases) {
    csv.add_row(std::vector<std::string>{
        v.name, format_value(v.measured), format_value(v.bound),
        v.at_most ? "max" : "min", v.pass ? "1" : "0"});
  }
  return csv.str();
}

}  // namespace holes2d
