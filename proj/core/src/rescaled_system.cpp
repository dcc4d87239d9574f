#include "holes2d/rescaled_system.hpp"

#include <cmath>
#include <stdexcept>

#include "holes2d/linalg.hpp"
#include "holes2d/potentials.hpp"

namespace holes2d {

namespace {

void check_data(const ProblemConfig& config) {
  if (!config.f1 || !config.f2 || !config.g) {
    throw std::invalid_argument("boundary data not set");
  }
}

LambdaSystem assemble_impl(const ProblemConfig& config, double rho1,
                           double rho2) {
  check_data(config);
  const PeriodicRule rule(config.M);
  const int M = config.M;
  const double w = rule.weight();
  const int N = 3 * M + 1;

  struct CurveNodes {
    std::vector<Vec2> x, nu;
    Eigen::VectorXd sp;
  };
  auto nodes_of = [&](const ParametrizedCurve& c) {
    CurveNodes n;
    n.x.resize(M);
    n.nu.resize(M);
    n.sp.resize(M);
    for (int k = 0; k < M; ++k) {
      n.x[k] = c.point(rule.node(k));
      n.nu[k] = c.normal(rule.node(k));
      n.sp[k] = c.speed(rule.node(k));
    }
    return n;
  };
  const CurveNodes h1 = nodes_of(config.hole1);
  const CurveNodes h2 = nodes_of(config.hole2);
  const CurveNodes oc = nodes_of(config.outer);

  LambdaSystem sys;
  sys.M = M;
  sys.A = Eigen::MatrixXd::Zero(N, N);
  sys.rhs.resize(N);
  Eigen::MatrixXd& A = sys.A;

  // rescaled Neumann rows for hole j: jump term of its own layer, the
  // rho2-scaled interaction with the other hole, and the outer layer seen
  // from inside the shrinking cluster
  auto hole_rows = [&](int row0, const ParametrizedCurve& cj,
                       const CurveNodes& nj, const Vec2& pj, int colj,
                       const CurveNodes& nl, const Vec2& pl, int coll) {
    A.block(row0, colj, M, M) = 0.5 * Eigen::MatrixXd::Identity(M, M) +
                                adjoint_double_layer_self(cj, rule);
    const Vec2 dp = pj - pl;
    for (int i = 0; i < M; ++i) {
      for (int k = 0; k < M; ++k) {
        A(row0 + i, coll + k) =
            w * rho2 * grad_s2(dp + rho2 * (nj.x[i] - nl.x[k])).dot(nj.nu[i]) *
            nl.sp[k];
        A(row0 + i, 2 * M + k) =
            w * grad_s2(rho1 * pj + rho1 * rho2 * nj.x[i] - oc.x[k])
                    .dot(nj.nu[i]) *
            oc.sp[k];
      }
    }
  };
  hole_rows(0, config.hole1, h1, config.p1, 0, h2, config.p2, M);
  hole_rows(M, config.hole2, h2, config.p2, M, h1, config.p1, 0);

  // Dirichlet rows on the outer boundary; the hole layers carry the measure
  // factor rho1*rho2 of the shrunken curves
  const double pref = rho1 * rho2;
  for (int i = 0; i < M; ++i) {
    if (pref != 0.0) {
      for (int k = 0; k < M; ++k) {
        A(2 * M + i, k) =
            w * pref *
            s2(oc.x[i] - rho1 * config.p1 - pref * h1.x[k]) * h1.sp[k];
        A(2 * M + i, M + k) =
            w * pref *
            s2(oc.x[i] - rho1 * config.p2 - pref * h2.x[k]) * h2.sp[k];
      }
    }
    A(2 * M + i, N - 1) = 1.0;
  }
  A.block(2 * M, 2 * M, M, M) = single_layer_self(config.outer, 1.0, rule);

  // zero arclength mean of the outer density
  for (int k = 0; k < M; ++k) A(N - 1, 2 * M + k) = w * oc.sp[k];

  for (int i = 0; i < M; ++i) {
    sys.rhs[i] = config.f1(rule.node(i), h1.x[i]);
    sys.rhs[M + i] = config.f2(rule.node(i), h2.x[i]);
    sys.rhs[2 * M + i] = config.g(rule.node(i), oc.x[i]);
  }
  sys.rhs[N - 1] = 0.0;
  return sys;
}

DensityQuadruple solve_impl(const ProblemConfig& config, double rho1,
                            double rho2, const LambdaSystem& sys) {
  const int M = sys.M;
  const LinearSolveResult r = lu_solve(sys.A, sys.rhs);

  DensityQuadruple q;
  q.theta_i1 = r.x.segment(0, M);
  q.theta_i2 = r.x.segment(M, M);
  q.theta_o = r.x.segment(2 * M, M);
  q.xi = r.x[3 * M];
  q.rho1 = rho1;
  q.rho2 = rho2;
  q.cond_estimate = r.cond_estimate;
  q.residual_norm = r.residual_norm;

  const PeriodicRule rule(M);
  q.theta_o_mean = boundary_integral(config.outer, rule, q.theta_o);
  q.flux_error1 = std::abs(boundary_integral(config.hole1, rule, q.theta_i1) -
                           hole_data_integral(config, 1));
  q.flux_error2 = std::abs(boundary_integral(config.hole2, rule, q.theta_i2) -
                           hole_data_integral(config, 2));
  return q;
}

}  // namespace

LambdaSystem assemble_lambda(const ProblemConfig& config, double rho1,
                             double rho2) {
  const ValidationReport report = validate_configuration(config, rho1, rho2);
  if (!report.ok) {
    throw std::invalid_argument("inadmissible configuration: " +
                                report.violation);
  }
  return assemble_impl(config, rho1, rho2);
}

LambdaSystem assemble_lambda_unchecked(const ProblemConfig& config,
                                       double rho1, double rho2) {
  return assemble_impl(config, rho1, rho2);
}

DensityQuadruple solve_densities(const ProblemConfig& config, double rho1,
                                 double rho2) {
  const LambdaSystem sys = assemble_lambda(config, rho1, rho2);
  DensityQuadruple q = solve_impl(config, rho1, rho2, sys);
  // conservation beyond this level signals an under-resolved discretization
  const double scale =
      std::max({1.0, std::abs(hole_data_integral(config, 1)),
                std::abs(hole_data_integral(config, 2))});
  if (q.flux_error1 > 1e-8 * scale || q.flux_error2 > 1e-8 * scale ||
      std::abs(q.theta_o_mean) > 1e-8 * scale) {
    throw std::runtime_error("discrete conservation violated; raise M");
  }
  return q;
}

DensityQuadruple solve_densities_unchecked(const ProblemConfig& config,
                                           double rho1, double rho2) {
  const LambdaSystem sys = assemble_lambda_unchecked(config, rho1, rho2);
  return solve_impl(config, rho1, rho2, sys);
}

DensityQuadruple solve_limit_quadruple(const ProblemConfig& config) {
  return solve_densities(config, 0.0, config.r_star);
}

Eigen::VectorXd sample_hole_data(const ProblemConfig& config, int j,
                                 const PeriodicRule& rule) {
  check_data(config);
  const ParametrizedCurve& c = (j == 1) ? config.hole1 : config.hole2;
  const BoundaryFn& f = (j == 1) ? config.f1 : config.f2;
  Eigen::VectorXd v(rule.size());
  for (int k = 0; k < rule.size(); ++k) {
    v[k] = f(rule.node(k), c.point(rule.node(k)));
  }
  return v;
}

Eigen::VectorXd sample_outer_data(const ProblemConfig& config,
                                  const PeriodicRule& rule) {
  check_data(config);
  Eigen::VectorXd v(rule.size());
  for (int k = 0; k < rule.size(); ++k) {
    v[k] = config.g(rule.node(k), config.outer.point(rule.node(k)));
  }
  return v;
}

double hole_data_integral(const ProblemConfig& config, int j) {
  const PeriodicRule rule(config.M);
  const ParametrizedCurve& c = (j == 1) ? config.hole1 : config.hole2;
  return boundary_integral(c, rule, sample_hole_data(config, j, rule));
}

}  // namespace holes2d
