#include "holes2d/expansion.hpp"

#include <algorithm>
#include <cmath>

#include "holes2d/linalg.hpp"
#include "holes2d/potentials.hpp"
#include "holes2d/quadrature.hpp"

namespace holes2d {

namespace {

Eigen::VectorXd speeds(const ParametrizedCurve& curve,
                       const PeriodicRule& rule) {
  Eigen::VectorXd sp(rule.size());
  for (int k = 0; k < rule.size(); ++k) sp[k] = curve.speed(rule.node(k));
  return sp;
}

}  // namespace

ExpansionCoefficients compute_expansion(const ProblemConfig& config) {
  ExpansionCoefficients c;
  const int M = config.M;
  c.M = M;
  const PeriodicRule rule(M);
  const double w = rule.weight();

  c.base = solve_densities(config, 0.0, 0.0);
  c.flux1 = hole_data_integral(config, 1);
  c.flux2 = hole_data_integral(config, 2);

  // first moments of the limit outer density at the cluster point
  for (int k = 0; k < M; ++k) {
    const double t = rule.node(k);
    const Vec2 y = config.outer.point(t);
    const double m = w * c.base.theta_o[k] * config.outer.speed(t);
    c.grad_u0 += grad_s2(-y) * m;
    c.hess_u0 += hess_s2(y) * m;
  }

  // hole-density derivatives from the limiting self operators
  for (int j = 1; j <= 2; ++j) {
    const ParametrizedCurve& curve = (j == 1) ? config.hole1 : config.hole2;
    const Vec2& pj = (j == 1) ? config.p1 : config.p2;
    const Vec2& pl = (j == 1) ? config.p2 : config.p1;
    const double flux_l = (j == 1) ? c.flux2 : c.flux1;
    Eigen::MatrixXd Aj = adjoint_double_layer_self(curve, rule);
    Aj.diagonal().array() += 0.5;
    const Vec2 ap = c.hess_u0 * pj;
    const Vec2 gl = grad_s2(pl - pj) * flux_l;
    Eigen::VectorXd rhs10(M), rhs01(M);
    for (int i = 0; i < M; ++i) {
      const Vec2 nu = curve.normal(rule.node(i));
      rhs10[i] = -ap.dot(nu);
      rhs01[i] = gl.dot(nu);
    }
    const LuSolver lu(Aj);
    if (j == 1) {
      c.theta1_d10 = lu.solve(rhs10);
      c.theta1_d01 = lu.solve(rhs01);
    } else {
      c.theta2_d10 = lu.solve(rhs10);
      c.theta2_d01 = lu.solve(rhs01);
    }
  }

  // outer-density derivatives from the bordered Dirichlet system
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(M + 1, M + 1);
  B.topLeftCorner(M, M) = single_layer_self(config.outer, 1.0, rule);
  B.topRightCorner(M, 1).setOnes();
  const Eigen::VectorXd sp_o = speeds(config.outer, rule);
  B.bottomLeftCorner(1, M) = (w * sp_o).transpose();

  const double flux_sum = c.flux1 + c.flux2;
  const Vec2 moment = config.p1 * c.flux1 + config.p2 * c.flux2;
  Eigen::VectorXd r11 = Eigen::VectorXd::Zero(M + 1);
  Eigen::VectorXd r21 = Eigen::VectorXd::Zero(M + 1);
  for (int k = 0; k < M; ++k) {
    const Vec2 y = config.outer.point(rule.node(k));
    r11[k] = -s2(y) * flux_sum;
    r21[k] = 2.0 * grad_s2(y).dot(moment);
  }
  const LuSolver lu(B);
  const Eigen::VectorXd s11 = lu.solve(r11);
  const Eigen::VectorXd s21 = lu.solve(r21);
  c.theta_o_11 = s11.head(M);
  c.xi_11 = s11[M];
  c.theta_o_21 = s21.head(M);
  c.xi_21 = s21[M];
  return c;
}

HarmonicField order_11_field(const ProblemConfig& config,
                             const ExpansionCoefficients& c) {
  HarmonicField f;
  f.terms.push_back({config.outer, Placement{}, c.theta_o_11, 1.0});
  f.xi = c.xi_11;
  return f;
}

HarmonicField order_21_field(const ProblemConfig& config,
                             const ExpansionCoefficients& c) {
  HarmonicField f;
  f.terms.push_back({config.outer, Placement{}, c.theta_o_21, 1.0});
  f.xi = c.xi_21;
  return f;
}

Eigen::VectorXd eval_expansion(const ProblemConfig& config,
                               const ExpansionCoefficients& c, double rho1,
                               double rho2, const std::vector<Vec2>& targets,
                               int eval_M) {
  Eigen::VectorXd out = eval_field(build_field(config, c.base), targets,
                                   eval_M);
  const Eigen::VectorXd v11 =
      eval_field(order_11_field(config, c), targets, eval_M);
  const Eigen::VectorXd v21 =
      eval_field(order_21_field(config, c), targets, eval_M);
  const double s = rho1 * rho2;
  const double s21 = rho1 * rho1 * rho2;
  const double flux_sum = c.flux1 + c.flux2;
  const Vec2 moment = config.p1 * c.flux1 + config.p2 * c.flux2;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Vec2& x = targets[i];
    out[static_cast<int>(i)] +=
        s * (v11[static_cast<int>(i)] + s2(x) * flux_sum) +
        s21 * (0.5 * v21[static_cast<int>(i)] - grad_s2(x).dot(moment));
  }
  return out;
}

double eval_expansion(const ProblemConfig& config,
                      const ExpansionCoefficients& c, double rho1, double rho2,
                      const Vec2& target, int eval_M) {
  return eval_expansion(config, c, rho1, rho2, std::vector<Vec2>{target},
                        eval_M)[0];
}

double DerivativeChecks::max_error() const {
  return std::max({theta1_d10, theta2_d10, theta1_d01, theta2_d01,
                   theta_o_d10, theta_o_d01, theta_o_11, xi_11, theta_o_21,
                   xi_21, theta_o_12});
}

double gated_max_error(const DerivativeChecks& checks,
                       const ExpansionCoefficients& c) {
  double e = std::max({checks.theta_o_d10, checks.theta_o_d01, checks.xi_21,
                       checks.theta_o_12});
  const auto gate = [&](double err, double coeff_norm) {
    if (coeff_norm > 1e-6) e = std::max(e, err);
  };
  gate(checks.theta1_d10, c.theta1_d10.lpNorm<Eigen::Infinity>());
  gate(checks.theta2_d10, c.theta2_d10.lpNorm<Eigen::Infinity>());
  gate(checks.theta1_d01, c.theta1_d01.lpNorm<Eigen::Infinity>());
  gate(checks.theta2_d01, c.theta2_d01.lpNorm<Eigen::Infinity>());
  gate(checks.theta_o_11, c.theta_o_11.lpNorm<Eigen::Infinity>());
  gate(checks.xi_11, std::abs(c.xi_11));
  gate(checks.theta_o_21, c.theta_o_21.lpNorm<Eigen::Infinity>());
  return e;
}

namespace {

// solves at the stencil points for one step size
struct Stencil {
  DensityQuadruple pp, pm, mp, mm, p0, m0, zp, zm;
};

Stencil solve_stencil(const ProblemConfig& cfg, double h) {
  Stencil s;
  s.pp = solve_densities_unchecked(cfg, h, h);
  s.pm = solve_densities_unchecked(cfg, h, -h);
  s.mp = solve_densities_unchecked(cfg, -h, h);
  s.mm = solve_densities_unchecked(cfg, -h, -h);
  s.p0 = solve_densities_unchecked(cfg, h, 0.0);
  s.m0 = solve_densities_unchecked(cfg, -h, 0.0);
  s.zp = solve_densities_unchecked(cfg, 0.0, h);
  s.zm = solve_densities_unchecked(cfg, 0.0, -h);
  return s;
}

using Accessor = Eigen::VectorXd (*)(const DensityQuadruple&);

// second-order central quotients in the two parameters
Eigen::VectorXd d10(const Stencil& s, double h, Accessor v) {
  return (v(s.p0) - v(s.m0)) / (2.0 * h);
}
Eigen::VectorXd d01(const Stencil& s, double h, Accessor v) {
  return (v(s.zp) - v(s.zm)) / (2.0 * h);
}
Eigen::VectorXd d11(const Stencil& s, double h, Accessor v) {
  return (v(s.pp) - v(s.pm) - v(s.mp) + v(s.mm)) / (4.0 * h * h);
}
Eigen::VectorXd d21(const Stencil& s, double h, Accessor v) {
  return (v(s.pp) - v(s.pm) - 2.0 * v(s.zp) + 2.0 * v(s.zm) + v(s.mp) -
          v(s.mm)) /
         (2.0 * h * h * h);
}
Eigen::VectorXd d12(const Stencil& s, double h, Accessor v) {
  return (v(s.pp) - v(s.mp) - 2.0 * v(s.p0) + 2.0 * v(s.m0) + v(s.pm) -
          v(s.mm)) /
         (2.0 * h * h * h);
}

double rel_error(const Eigen::VectorXd& fd, const Eigen::VectorXd& exact) {
  const double scale = std::max(exact.lpNorm<Eigen::Infinity>(), 1e-8);
  return (fd - exact).lpNorm<Eigen::Infinity>() / scale;
}

double size_against(const Eigen::VectorXd& fd, double scale) {
  return fd.lpNorm<Eigen::Infinity>() / std::max(scale, 1e-8);
}

Eigen::VectorXd scalar(double v) { return Eigen::VectorXd::Constant(1, v); }

}  // namespace

DerivativeChecks finite_difference_checks(const ProblemConfig& config,
                                          const ExpansionCoefficients& c,
                                          double h) {
  const Stencil coarse = solve_stencil(config, h);
  const Stencil fine = solve_stencil(config, h / 2.0);
  const auto richardson = [&](const auto& quotient, Accessor v) {
    return ((4.0 * quotient(fine, h / 2.0, v) - quotient(coarse, h, v)) / 3.0)
        .eval();
  };
  const Accessor t1 = [](const DensityQuadruple& q) { return q.theta_i1; };
  const Accessor t2 = [](const DensityQuadruple& q) { return q.theta_i2; };
  const Accessor to = [](const DensityQuadruple& q) { return q.theta_o; };
  const Accessor xi = [](const DensityQuadruple& q) { return scalar(q.xi); };

  DerivativeChecks r;
  r.theta1_d10 = rel_error(richardson(d10, t1), c.theta1_d10);
  r.theta2_d10 = rel_error(richardson(d10, t2), c.theta2_d10);
  r.theta1_d01 = rel_error(richardson(d01, t1), c.theta1_d01);
  r.theta2_d01 = rel_error(richardson(d01, t2), c.theta2_d01);
  const double outer_scale = c.base.theta_o.lpNorm<Eigen::Infinity>();
  r.theta_o_d10 = size_against(richardson(d10, to), outer_scale);
  r.theta_o_d01 = size_against(richardson(d01, to), outer_scale);
  r.theta_o_11 = rel_error(richardson(d11, to), c.theta_o_11);
  r.xi_11 = rel_error(richardson(d11, xi), scalar(c.xi_11));
  const double third_scale = c.theta_o_21.lpNorm<Eigen::Infinity>();
  r.theta_o_21 = rel_error(richardson(d21, to), c.theta_o_21);
  r.xi_21 = size_against(richardson(d21, xi), third_scale);
  r.theta_o_12 = size_against(richardson(d12, to), third_scale);
  return r;
}

}  // namespace holes2d
