// command-line harness: solve the two-hole problem, sweep the shrinking
// regime, audit the expansion, or run the validation battery
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holes2d/config_io.hpp"
#include "holes2d/csv.hpp"
#include "holes2d/expansion.hpp"
#include "holes2d/orderfit.hpp"
#include "holes2d/potentials.hpp"
#include "holes2d/representation.hpp"
#include "holes2d/rescaled_system.hpp"
#include "holes2d/validation.hpp"

namespace {

using namespace holes2d;

struct CommonOpts {
  std::string config_path;
  std::string out_dir = ".";
  int nodes = 0;      // 0: keep the configured M
  int eval_mult = 8;  // evaluation grid: eval_mult * M nodes
};

LoadedConfig load(const CommonOpts& opts) {
  LoadedConfig lc =
      opts.config_path.empty() ? default_config() : load_config(opts.config_path);
  if (opts.nodes > 0) lc.config.M = opts.nodes;
  return lc;
}

std::string hash_string(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void stamp(CsvWriter& csv, const LoadedConfig& lc) {
  csv.meta("config_hash", hash_string(lc.hash));
  csv.meta("M", std::to_string(lc.config.M));
}

std::string out_path(const CommonOpts& opts, const std::string& name) {
  std::filesystem::create_directories(opts.out_dir);
  return (std::filesystem::path(opts.out_dir) / name).string();
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path,
                  "JSON problem description (default: built-in)");
  cmd->add_option("--out", opts.out_dir, "output directory for CSV files");
  cmd->add_option("--nodes", opts.nodes, "override the quadrature node count");
  cmd->add_option("--eval-mult", opts.eval_mult,
                  "evaluation grid refinement factor")
      ->check(CLI::PositiveNumber);
}

int run_solve(const CommonOpts& opts, double rho1, double rho2) {
  const LoadedConfig lc = load(opts);
  const ProblemConfig& cfg = lc.config;
  const int eval_M = opts.eval_mult * cfg.M;
  const DensityQuadruple q = solve_densities(cfg, rho1, rho2);
  const HarmonicField field = build_field(cfg, q);

  CsvWriter csv({"view", "t1", "t2", "x1", "x2", "raw", "correction",
                 "corrected"});
  stamp(csv, lc);
  csv.meta("rho1", format_value(rho1));
  csv.meta("rho2", format_value(rho2));
  csv.meta("xi", format_value(q.xi));
  csv.meta("cond_estimate", format_value(q.cond_estimate));

  const auto add = [&](const std::string& view, const Vec2& t, const Vec2& x,
                       double raw, double corr) {
    csv.add_row(std::vector<std::string>{view, format_value(t.x()),
                                         format_value(t.y()),
                                         format_value(x.x()),
                                         format_value(x.y()), format_value(raw),
                                         format_value(corr),
                                         format_value(raw - corr)});
  };

  const Eigen::VectorXd macro = eval_field(field, lc.points.macro, eval_M);
  for (std::size_t i = 0; i < lc.points.macro.size(); ++i)
    add("macro", lc.points.macro[i], lc.points.macro[i],
        macro[static_cast<int>(i)], 0.0);

  if (!lc.points.micro.empty()) {
    const MicroView mv = micro_view(cfg, q, lc.points.micro, eval_M);
    for (std::size_t i = 0; i < lc.points.micro.size(); ++i)
      add("micro", lc.points.micro[i], rho1 * lc.points.micro[i],
          mv.raw[static_cast<int>(i)], mv.correction);
  }
  for (int j = 1; j <= 2; ++j) {
    if (lc.points.layer.empty()) break;
    const LayerView lv = layer_view(cfg, q, j, lc.points.layer, eval_M);
    const Vec2& pj = (j == 1) ? cfg.p1 : cfg.p2;
    for (std::size_t i = 0; i < lc.points.layer.size(); ++i)
      add("layer" + std::to_string(j), lc.points.layer[i],
          rho1 * pj + rho1 * rho2 * lc.points.layer[i],
          lv.raw[static_cast<int>(i)], lv.correction);
  }

  const std::string path = out_path(opts, "solution.csv");
  csv.write_file(path);
  std::cout << "solved at (rho1, rho2) = (" << rho1 << ", " << rho2
            << "), xi = " << q.xi << ", wrote " << path << "\n";
  return 0;
}

int run_converge(const CommonOpts& opts, double c, double beta,
                 std::vector<double> eps_grid, const std::string& view_name) {
  const LoadedConfig lc = load(opts);
  const ProblemConfig& cfg = lc.config;
  const int eval_M = opts.eval_mult * cfg.M;
  const EtaSpec eta{c, beta};

  ViewKind view = ViewKind::Micro;
  std::vector<Vec2> pts = lc.points.micro;
  if (view_name == "macro") {
    view = ViewKind::Macro;
    pts = lc.points.macro;
  } else if (view_name == "layer1") {
    view = ViewKind::Layer1;
    pts = lc.points.layer;
  } else if (view_name == "layer2") {
    view = ViewKind::Layer2;
    pts = lc.points.layer;
  } else if (view_name != "micro") {
    throw CLI::ValidationError("--view must be macro|micro|layer1|layer2");
  }
  if (pts.empty()) throw std::runtime_error("no points for view " + view_name);

  const HarmonicField limit = limit_field(cfg);
  Eigen::VectorXd reference(static_cast<int>(pts.size()));
  if (view == ViewKind::Macro) {
    reference = eval_field(limit, pts, eval_M);
  } else {
    reference.setConstant(eval_field(limit, Vec2{0.0, 0.0}, eval_M));
  }

  CsvWriter csv({"eps", "rho1", "rho2", "point", "raw", "corrected",
                 "reference", "raw_error", "corrected_error"});
  stamp(csv, lc);
  csv.meta("eta_c", format_value(eta.c));
  csv.meta("eta_beta", format_value(eta.beta));
  csv.meta("view", view_name);

  std::vector<double> worst;
  for (double eps : eps_grid) {
    const RegimeValues rv = eval_epsilon_regime(cfg, eta, eps, view, pts,
                                                eval_M);
    double w = 0.0;
    for (int i = 0; i < rv.raw.size(); ++i) {
      const double err_raw = std::abs(rv.raw[i] - reference[i]);
      const double err_cor = std::abs(rv.corrected[i] - reference[i]);
      w = std::max(w, err_cor);
      csv.add_row(std::vector<double>{eps, rv.rho1, rv.rho2, double(i),
                                      rv.raw[i], rv.corrected[i], reference[i],
                                      err_raw, err_cor});
    }
    worst.push_back(w);
  }
  if (eps_grid.size() >= 2) {
    const OrderFit fit = fit_order(eps_grid, worst);
    csv.meta("corrected_error_order", format_value(fit.slope));
    std::cout << "corrected-error order in eps: " << fit.slope << "\n";
  }
  const std::string path = out_path(opts, "convergence.csv");
  csv.write_file(path);
  std::cout << "wrote " << path << "\n";
  return 0;
}

int run_expand(const CommonOpts& opts, std::vector<double> grid) {
  const LoadedConfig lc = load(opts);
  const ProblemConfig& cfg = lc.config;
  const int eval_M = opts.eval_mult * cfg.M;
  const ExpansionCoefficients coeffs = compute_expansion(cfg);
  const DerivativeChecks fd = finite_difference_checks(cfg, coeffs);

  CsvWriter csv({"s", "two_term_error", "one_term_error"});
  stamp(csv, lc);
  csv.meta("flux1", format_value(coeffs.flux1));
  csv.meta("flux2", format_value(coeffs.flux2));
  csv.meta("xi_11", format_value(coeffs.xi_11));

  const std::vector<Vec2>& pts = lc.points.macro;
  if (pts.empty()) throw std::runtime_error("no macro points configured");
  const Eigen::VectorXd base =
      eval_field(build_field(cfg, coeffs.base), pts, eval_M);
  const Eigen::VectorXd v11 =
      eval_field(order_11_field(cfg, coeffs), pts, eval_M);
  std::vector<double> err_two, err_one;
  for (double s : grid) {
    const DensityQuadruple q = solve_densities(cfg, s, s);
    const Eigen::VectorXd u = eval_field(build_field(cfg, q), pts, eval_M);
    const Eigen::VectorXd two = eval_expansion(cfg, coeffs, s, s, pts, eval_M);
    double m2 = 0.0, m1 = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const int k = static_cast<int>(i);
      m2 = std::max(m2, std::abs(u[k] - two[k]));
      const double one =
          base[k] + s * s * (v11[k] + s2(pts[i]) *
                                          (coeffs.flux1 + coeffs.flux2));
      m1 = std::max(m1, std::abs(u[k] - one));
    }
    err_two.push_back(m2);
    err_one.push_back(m1);
    csv.add_row(std::vector<double>{s, m2, m1});
  }
  const OrderFit f2 = fit_order(grid, err_two);
  const OrderFit f1 = fit_order(grid, err_one);
  const double audit = gated_max_error(fd, coeffs);
  csv.meta("two_term_order", format_value(f2.slope));
  csv.meta("one_term_order", format_value(f1.slope));
  csv.meta("fd_audit_max", format_value(audit));

  const std::string path = out_path(opts, "expansion.csv");
  csv.write_file(path);
  std::cout << "two-term remainder order " << f2.slope
            << ", one-term order " << f1.slope
            << ", finite-difference audit max " << audit << "\n"
            << "wrote " << path << "\n";
  return 0;
}

int run_validate(const CommonOpts& opts) {
  const LoadedConfig lc = load(opts);
  const ValidationSuite suite = run_validation_suite(lc.config);
  CsvWriter csv({"name", "measured", "bound", "sense", "pass"});
  stamp(csv, lc);
  for (const ValidationCase& v : suite.cases) {
    csv.add_row(std::vector<std::string>{
        v.name, format_value(v.measured), format_value(v.bound),
        v.at_most ? "max" : "min", v.pass ? "1" : "0"});
    std::cout << (v.pass ? "pass" : "FAIL") << "  " << v.name << "  measured "
              << v.measured << (v.at_most ? " <= " : " >= ") << v.bound
              << "\n";
  }
  const std::string path = out_path(opts, "validation.csv");
  csv.write_file(path);
  std::cout << (suite.all_pass ? "all checks passed" : "CHECKS FAILED")
            << ", wrote " << path << "\n";
  return suite.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Boundary-integral solver for a planar domain with two small "
      "close-to-touching holes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "1.0.0");

  CommonOpts solve_opts, conv_opts, exp_opts, val_opts;
  double rho1 = 0.1, rho2 = 0.1;
  CLI::App* solve_cmd =
      app.add_subcommand("solve", "solve at one parameter pair");
  add_common(solve_cmd, solve_opts);
  solve_cmd->add_option("--rho1", rho1, "cluster size parameter");
  solve_cmd->add_option("--rho2", rho2, "relative hole size parameter");

  double eta_c = 1.0, eta_beta = 0.5;
  std::vector<double> eps_grid{0.04, 0.02, 0.01, 0.005};
  std::string view = "micro";
  CLI::App* conv_cmd = app.add_subcommand(
      "converge", "sweep eps with rho1 = c eps^beta, rho2 = eps/rho1");
  add_common(conv_cmd, conv_opts);
  conv_cmd->add_option("--eta-c", eta_c, "prefactor of eta");
  conv_cmd->add_option("--eta-beta", eta_beta, "exponent of eta, in (0, 1]");
  conv_cmd->add_option("--eps", eps_grid, "epsilon grid")
      ->delimiter(',')
      ->expected(-1);
  conv_cmd->add_option("--view", view, "macro|micro|layer1|layer2");

  std::vector<double> s_grid{0.1, 0.07, 0.05, 0.035, 0.025};
  CLI::App* exp_cmd = app.add_subcommand(
      "expand", "audit the expansion coefficients and remainder orders");
  add_common(exp_cmd, exp_opts);
  exp_cmd->add_option("--grid", s_grid, "diagonal parameter grid")
      ->delimiter(',')
      ->expected(-1);

  CLI::App* val_cmd =
      app.add_subcommand("validate", "run the deterministic method checks");
  add_common(val_cmd, val_opts);

  CLI11_PARSE(app, argc, argv);
  try {
    if (solve_cmd->parsed()) return run_solve(solve_opts, rho1, rho2);
    if (conv_cmd->parsed())
      return run_converge(conv_opts, eta_c, eta_beta, eps_grid, view);
    if (exp_cmd->parsed()) return run_expand(exp_opts, s_grid);
    return run_validate(val_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
