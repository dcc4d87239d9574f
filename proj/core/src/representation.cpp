#include "holes2d/representation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "holes2d/potentials.hpp"

namespace holes2d {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

HarmonicField build_field(const ProblemConfig& config,
                          const DensityQuadruple& q) {
  HarmonicField f;
  const double s = q.rho1 * q.rho2;
  if (s != 0.0) {
    f.terms.push_back(
        {config.hole1, Placement{q.rho1 * config.p1, s}, q.theta_i1, s});
    f.terms.push_back(
        {config.hole2, Placement{q.rho1 * config.p2, s}, q.theta_i2, s});
  }
  f.terms.push_back({config.outer, Placement{}, q.theta_o, 1.0});
  f.xi = q.xi;
  return f;
}

HarmonicField limit_field(const ProblemConfig& config) {
  return build_field(config, solve_limit_quadruple(config));
}

Eigen::VectorXd eval_field(const HarmonicField& field,
                           const std::vector<Vec2>& targets, int eval_M) {
  Eigen::VectorXd u = Eigen::VectorXd::Constant(
      static_cast<Eigen::Index>(targets.size()), field.xi);
  for (const LayerTerm& term : field.terms) {
    u += term.prefactor * layer_values_reference(term.curve, term.place,
                                                 term.density, targets, eval_M);
  }
  return u;
}

double eval_field(const HarmonicField& field, const Vec2& target, int eval_M) {
  return eval_field(field, std::vector<Vec2>{target}, eval_M)[0];
}

Vec2 eval_field_gradient(const HarmonicField& field, const Vec2& target,
                         int eval_M) {
  Vec2 g = Vec2::Zero();
  for (const LayerTerm& term : field.terms) {
    g += term.prefactor * layer_gradients_reference(term.curve, term.place,
                                                    term.density, {target},
                                                    eval_M)[0];
  }
  return g;
}

MicroView micro_view(const ProblemConfig& config, const DensityQuadruple& q,
                     const std::vector<Vec2>& ts, int eval_M) {
  const HarmonicField field = build_field(config, q);
  std::vector<Vec2> xs(ts.size());
  for (std::size_t j = 0; j < ts.size(); ++j) xs[j] = q.rho1 * ts[j];

  MicroView view;
  view.raw = eval_field(field, xs, eval_M);
  const double flux_sum =
      hole_data_integral(config, 1) + hole_data_integral(config, 2);
  view.log_coefficient = q.rho1 * q.rho2 * flux_sum / kTwoPi;
  view.correction =
      (q.rho1 > 0.0) ? view.log_coefficient * std::log(q.rho1) : 0.0;
  view.analytic = view.raw.array() - view.correction;
  return view;
}

LayerView layer_view(const ProblemConfig& config, const DensityQuadruple& q,
                     int j, const std::vector<Vec2>& ts, int eval_M) {
  if (j != 1 && j != 2) throw std::invalid_argument("hole index must be 1 or 2");
  const HarmonicField field = build_field(config, q);
  const Vec2& pj = (j == 1) ? config.p1 : config.p2;
  const double s = q.rho1 * q.rho2;
  std::vector<Vec2> xs(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    xs[i] = q.rho1 * pj + s * ts[i];
  }

  LayerView view;
  view.raw = eval_field(field, xs, eval_M);
  if (s > 0.0) {
    const double fj = hole_data_integral(config, j);
    const double fl = hole_data_integral(config, j == 1 ? 2 : 1);
    view.correction =
        s * (std::log(s) * fj + std::log(q.rho1) * fl) / kTwoPi;
  }
  view.analytic = view.raw.array() - view.correction;
  return view;
}

double EtaSpec::rho1(double eps) const { return c * std::pow(eps, beta); }

double EtaSpec::rho2(double eps) const { return eps / rho1(eps); }

double EtaSpec::r_star() const { return beta < 1.0 ? 0.0 : 1.0 / c; }

RegimeValues eval_epsilon_regime(const ProblemConfig& config,
                                 const EtaSpec& eta, double eps, ViewKind view,
                                 const std::vector<Vec2>& pts, int eval_M) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (!(eta.c > 0.0) || !(eta.beta > 0.0) || eta.beta > 1.0) {
    throw std::invalid_argument("eta family requires c > 0 and beta in (0,1]");
  }
  RegimeValues out;
  out.eps = eps;
  out.rho1 = eta.rho1(eps);
  out.rho2 = eta.rho2(eps);
  const DensityQuadruple q = solve_densities(config, out.rho1, out.rho2);
  out.cond_estimate = q.cond_estimate;

  switch (view) {
    case ViewKind::Macro: {
      const HarmonicField field = build_field(config, q);
      out.raw = eval_field(field, pts, eval_M);
      out.correction = 0.0;
      break;
    }
    case ViewKind::Micro: {
      const MicroView mv = micro_view(config, q, pts, eval_M);
      out.raw = mv.raw;
      out.correction = mv.correction;
      break;
    }
    case ViewKind::Layer1:
    case ViewKind::Layer2: {
      const LayerView lv = layer_view(
          config, q, view == ViewKind::Layer1 ? 1 : 2, pts, eval_M);
      out.raw = lv.raw;
      out.correction = lv.correction;
      break;
    }
  }
  out.corrected = out.raw.array() - out.correction;
  return out;
}

}  // namespace holes2d
