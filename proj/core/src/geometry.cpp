#include "holes2d/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace holes2d {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kScanSize = 4096;       // dense scan for extents and winding
constexpr int kSimplicitySize = 512;  // coarser scan for self-intersection

double eval_series(double c0, const std::vector<double>& cc,
                   const std::vector<double>& cs, double t, int deriv) {
  double v = (deriv == 0) ? c0 : 0.0;
  const std::size_t n = std::max(cc.size(), cs.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double m = static_cast<double>(i + 1);
    const double a = i < cc.size() ? cc[i] : 0.0;
    const double b = i < cs.size() ? cs[i] : 0.0;
    switch (deriv) {
      case 0:
        v += a * std::cos(m * t) + b * std::sin(m * t);
        break;
      case 1:
        v += m * (-a * std::sin(m * t) + b * std::cos(m * t));
        break;
      default:
        v += m * m * (-a * std::cos(m * t) - b * std::sin(m * t));
        break;
    }
  }
  return v;
}

}  // namespace

ParametrizedCurve::ParametrizedCurve(Kind kind, double const_x,
                                     std::vector<double> cos_x,
                                     std::vector<double> sin_x, double const_y,
                                     std::vector<double> cos_y,
                                     std::vector<double> sin_y)
    : kind_(kind),
      const_x_(const_x),
      const_y_(const_y),
      cos_x_(std::move(cos_x)),
      sin_x_(std::move(sin_x)),
      cos_y_(std::move(cos_y)),
      sin_y_(std::move(sin_y)) {
  auto scan = std::make_shared<DenseScan>();
  scan->points.resize(kScanSize);
  scan->min_speed = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kScanSize; ++k) {
    const double t = kTwoPi * k / kScanSize;
    scan->points[k] = point(t);
    const double s = derivative(t).norm();
    scan->max_speed = std::max(scan->max_speed, s);
    scan->min_speed = std::min(scan->min_speed, s);
  }
  if (!(scan->max_speed > 0.0) ||
      scan->min_speed < 1e-9 * std::max(1.0, scan->max_speed)) {
    throw std::invalid_argument("curve parametrization is degenerate");
  }
  // crude diameter: max pairwise distance over a decimated subset
  for (int i = 0; i < kScanSize; i += 16) {
    for (int j = i + 16; j < kScanSize; j += 16) {
      scan->diameter =
          std::max(scan->diameter, (scan->points[i] - scan->points[j]).norm());
    }
  }
  // simplicity: distinct parameters at least two node spacings apart must not
  // come closer than a fraction of the arc between them
  const double h = kTwoPi / kSimplicitySize;
  for (int i = 0; i < kSimplicitySize; ++i) {
    const Vec2 xi = scan->points[i * (kScanSize / kSimplicitySize)];
    for (int j = i + 2; j < kSimplicitySize; ++j) {
      if (i == 0 && j >= kSimplicitySize - 1) continue;  // wrap neighbour
      const Vec2 xj = scan->points[j * (kScanSize / kSimplicitySize)];
      const int gap = std::min(j - i, kSimplicitySize - (j - i));
      if (gap < 2) continue;
      if ((xi - xj).norm() < 0.25 * scan->min_speed * h * gap &&
          (xi - xj).norm() < 0.05 * scan->min_speed) {
        throw std::invalid_argument("curve is not simple");
      }
    }
  }
  scan_ = std::move(scan);
}

ParametrizedCurve ParametrizedCurve::circle(const Vec2& center,
                                            double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  return ParametrizedCurve(Kind::Circle, center.x(), {radius}, {0.0},
                           center.y(), {0.0}, {radius});
}

ParametrizedCurve ParametrizedCurve::ellipse(const Vec2& center, double a,
                                             double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("semiaxes must be positive");
  }
  return ParametrizedCurve(Kind::Ellipse, center.x(), {a}, {0.0}, center.y(),
                           {0.0}, {b});
}

ParametrizedCurve ParametrizedCurve::trig(double const_x,
                                          std::vector<double> cos_x,
                                          std::vector<double> sin_x,
                                          double const_y,
                                          std::vector<double> cos_y,
                                          std::vector<double> sin_y) {
  return ParametrizedCurve(Kind::Trig, const_x, std::move(cos_x),
                           std::move(sin_x), const_y, std::move(cos_y),
                           std::move(sin_y));
}

Vec2 ParametrizedCurve::point(double t) const {
  return {eval_series(const_x_, cos_x_, sin_x_, t, 0),
          eval_series(const_y_, cos_y_, sin_y_, t, 0)};
}

Vec2 ParametrizedCurve::derivative(double t) const {
  return {eval_series(const_x_, cos_x_, sin_x_, t, 1),
          eval_series(const_y_, cos_y_, sin_y_, t, 1)};
}

Vec2 ParametrizedCurve::second_derivative(double t) const {
  return {eval_series(const_x_, cos_x_, sin_x_, t, 2),
          eval_series(const_y_, cos_y_, sin_y_, t, 2)};
}

double ParametrizedCurve::speed(double t) const { return derivative(t).norm(); }

Vec2 ParametrizedCurve::normal(double t) const {
  const Vec2 d = derivative(t);
  return Vec2{d.y(), -d.x()} / d.norm();
}

double ParametrizedCurve::curvature(double t) const {
  const Vec2 d = derivative(t);
  const Vec2 dd = second_derivative(t);
  const double s = d.norm();
  return (d.x() * dd.y() - d.y() * dd.x()) / (s * s * s);
}

double ParametrizedCurve::max_speed() const { return scan_->max_speed; }
double ParametrizedCurve::min_speed() const { return scan_->min_speed; }
double ParametrizedCurve::diameter() const { return scan_->diameter; }

const std::vector<Vec2>& ParametrizedCurve::dense_points() const {
  return scan_->points;
}

double ParametrizedCurve::boundary_distance(const Vec2& x) const {
  double d = std::numeric_limits<double>::infinity();
  for (const Vec2& p : scan_->points) d = std::min(d, (p - x).norm());
  return d;
}

int ParametrizedCurve::winding_number(const Vec2& x) const {
  const auto& pts = scan_->points;
  double total = 0.0;
  Vec2 prev = pts.back() - x;
  for (const Vec2& p : pts) {
    const Vec2 cur = p - x;
    total += std::atan2(prev.x() * cur.y() - prev.y() * cur.x(),
                        prev.dot(cur));
    prev = cur;
  }
  return static_cast<int>(std::lround(total / kTwoPi));
}

double guard_delta(const ParametrizedCurve& curve, int nodes, double scale) {
  return 5.0 * (kTwoPi / nodes) * curve.max_speed() * std::abs(scale);
}

PointLocation locate_point(const ParametrizedCurve& curve, const Vec2& x,
                           double band) {
  if (curve.boundary_distance(x) <= band) return PointLocation::NearBoundary;
  return curve.winding_number(x) != 0 ? PointLocation::Inside
                                      : PointLocation::Outside;
}

PointLocation locate_mapped(const ParametrizedCurve& curve,
                            const Placement& place, const Vec2& x,
                            double band) {
  if (place.scale == 0.0) {
    // curve collapses to the single point `offset`
    return (x - place.offset).norm() <= band ? PointLocation::NearBoundary
                                             : PointLocation::Outside;
  }
  const Vec2 y = (x - place.offset) / place.scale;
  return locate_point(curve, y, band / std::abs(place.scale));
}

namespace {

// minimum distance between the dense scans of two mapped curves
double mapped_gap(const ParametrizedCurve& a, const Placement& pa,
                  const ParametrizedCurve& b, const Placement& pb) {
  double gap = std::numeric_limits<double>::infinity();
  const auto& qa = a.dense_points();
  const auto& qb = b.dense_points();
  for (std::size_t i = 0; i < qa.size(); i += 4) {
    const Vec2 xa = pa.offset + pa.scale * qa[i];
    for (std::size_t j = 0; j < qb.size(); j += 4) {
      const Vec2 xb = pb.offset + pb.scale * qb[j];
      gap = std::min(gap, (xa - xb).norm());
    }
  }
  return gap;
}

}  // namespace

ValidationReport validate_configuration(const ProblemConfig& config,
                                        double rho1, double rho2) {
  ValidationReport report;
  auto fail = [&report](const std::string& why) {
    report.ok = false;
    report.violation = why;
    return report;
  };

  if (config.M < 8 || config.M % 2 != 0) {
    return fail("node count must be even and at least 8");
  }
  if (!(rho1 >= 0.0) || !(rho2 >= 0.0)) {
    return fail("size parameters must be nonnegative");
  }
  if ((config.p1 - config.p2).norm() == 0.0) {
    return fail("anchor points coincide");
  }
  const double h = kTwoPi / config.M;
  for (const auto* c : {&config.outer, &config.hole1, &config.hole2}) {
    if (locate_point(*c, Vec2{0.0, 0.0}, 0.0) != PointLocation::Inside) {
      return fail("origin must lie inside every reference curve");
    }
  }

  // (a) separation of the rho2-scaled holes anchored at p1, p2
  auto check_cluster = [&](double r2) -> std::string {
    if (r2 == 0.0) return {};  // distinct anchor points suffice
    const Placement pl1{config.p1, r2};
    const Placement pl2{config.p2, r2};
    const double margin =
        3.0 * h * r2 * std::max(config.hole1.max_speed(),
                                config.hole2.max_speed());
    if (mapped_gap(config.hole1, pl1, config.hole2, pl2) < margin) {
      return "scaled holes are closer than the safety margin";
    }
    // boundary separation alone admits nesting; check a sample point
    const Vec2 s1 = pl1.offset + pl1.scale * config.hole1.dense_points()[0];
    const Vec2 s2 = pl2.offset + pl2.scale * config.hole2.dense_points()[0];
    if (locate_mapped(config.hole2, pl2, s1, 0.0) != PointLocation::Outside ||
        locate_mapped(config.hole1, pl1, s2, 0.0) != PointLocation::Outside) {
      return "scaled holes are nested";
    }
    return {};
  };
  if (auto why = check_cluster(rho2); !why.empty()) return fail("(a) " + why);
  if (config.r_star > 0.0) {
    if (auto why = check_cluster(config.r_star); !why.empty()) {
      return fail("(a, limit ratio) " + why);
    }
  }

  // (b) the rho1-scaled cluster sits strictly inside the outer domain
  if (rho1 > 0.0) {
    const double margin = 3.0 * h * config.outer.max_speed();
    for (int j = 0; j < 2; ++j) {
      const auto& hole = (j == 0) ? config.hole1 : config.hole2;
      const Vec2& p = (j == 0) ? config.p1 : config.p2;
      const Placement pl{rho1 * p, rho1 * rho2};
      if (rho2 == 0.0) {
        if (locate_point(config.outer, pl.offset, margin) !=
            PointLocation::Inside) {
          return fail("(b) scaled anchor point leaves the outer domain");
        }
        continue;
      }
      for (std::size_t i = 0; i < hole.dense_points().size(); i += 4) {
        const Vec2 x = pl.offset + pl.scale * hole.dense_points()[i];
        if (locate_point(config.outer, x, margin) != PointLocation::Inside) {
          return fail("(b) scaled hole leaves the outer domain");
        }
      }
    }
  }
  return report;
}

}  // namespace holes2d
