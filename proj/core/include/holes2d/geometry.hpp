#ifndef HOLES2D_GEOMETRY_HPP
#define HOLES2D_GEOMETRY_HPP

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace holes2d {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

// Closed analytic Jordan curve x(t), t in [0, 2*pi), given componentwise by a
// truncated trigonometric series.  Orientation is counterclockwise, so the
// outward normal of the enclosed region is (x2', -x1') / |x'|.
class ParametrizedCurve {
 public:
  enum class Kind { Circle, Ellipse, Trig };

  static ParametrizedCurve circle(const Vec2& center, double radius);
  static ParametrizedCurve ellipse(const Vec2& center, double a, double b);
  // x_i(t) = const_i + sum_m (cos_i[m-1] cos(mt) + sin_i[m-1] sin(mt))
  static ParametrizedCurve trig(double const_x, std::vector<double> cos_x,
                                std::vector<double> sin_x, double const_y,
                                std::vector<double> cos_y,
                                std::vector<double> sin_y);

  Kind kind() const { return kind_; }

  Vec2 point(double t) const;
  Vec2 derivative(double t) const;
  Vec2 second_derivative(double t) const;
  double speed(double t) const;          // |x'(t)|, positive by construction
  Vec2 normal(double t) const;           // outward unit normal
  double curvature(double t) const;      // signed, +1/R for a ccw circle

  double max_speed() const;              // sup |x'| over a dense scan
  double min_speed() const;
  double diameter() const;               // of a dense boundary sample
  const std::vector<Vec2>& dense_points() const;  // fixed dense boundary scan

  // distance from x to the dense boundary sample (upper bound on true dist)
  double boundary_distance(const Vec2& x) const;
  // winding number of the boundary about x (valid away from the curve)
  int winding_number(const Vec2& x) const;

 private:
  ParametrizedCurve(Kind kind, double const_x, std::vector<double> cos_x,
                    std::vector<double> sin_x, double const_y,
                    std::vector<double> cos_y, std::vector<double> sin_y);

  struct DenseScan {
    std::vector<Vec2> points;
    double max_speed = 0.0;
    double min_speed = 0.0;
    double diameter = 0.0;
  };

  Kind kind_;
  double const_x_, const_y_;
  std::vector<double> cos_x_, sin_x_, cos_y_, sin_y_;
  std::shared_ptr<const DenseScan> scan_;
};

// Affine placement x -> offset + scale * x of a reference curve in the plane.
struct Placement {
  Vec2 offset{0.0, 0.0};
  double scale = 1.0;
};

enum class PointLocation { Inside, Outside, NearBoundary };

// Width of the band around a discretized curve inside which plain quadrature
// evaluation of layer potentials is unreliable: 5 node spacings, in physical
// units of the mapped curve.
double guard_delta(const ParametrizedCurve& curve, int nodes,
                   double scale = 1.0);

PointLocation locate_point(const ParametrizedCurve& curve, const Vec2& x,
                           double band);
PointLocation locate_mapped(const ParametrizedCurve& curve,
                            const Placement& place, const Vec2& x,
                            double band);

// Boundary data sampled along a curve: t is the curve parameter, x the
// corresponding point after any placement the caller applies.
using BoundaryFn = std::function<double(double t, const Vec2& x)>;

struct ProblemConfig {
  // boundary of the macroscopic domain and reference shapes of the two
  // holes; each must enclose the origin
  ParametrizedCurve outer = ParametrizedCurve::circle({0.0, 0.0}, 1.0);
  ParametrizedCurve hole1 = ParametrizedCurve::circle({0.0, 0.0}, 1.0);
  ParametrizedCurve hole2 = ParametrizedCurve::circle({0.0, 0.0}, 1.0);
  Vec2 p1{0.0, 0.0};         // hole anchor points, p1 != p2
  Vec2 p2{0.0, 0.0};
  double r_star = 0.0;       // limit value of the inner size ratio
  BoundaryFn f1;             // Neumann data on the holes (reference coords)
  BoundaryFn f2;
  BoundaryFn g;              // Dirichlet data on the outer boundary
  int M = 128;               // quadrature nodes per curve, even
};

struct ValidationReport {
  bool ok = true;
  std::string violation;     // empty iff ok
};

// Admissibility of the pair (rho1, rho2) >= 0 for the given configuration:
// the rho2-scaled holes anchored at p1, p2 must be disjoint, and the rho1-
// scaled cluster must sit strictly inside the outer domain, each with a
// safety margin of three node spacings at the configured resolution.
ValidationReport validate_configuration(const ProblemConfig& config,
                                        double rho1, double rho2);

}  // namespace holes2d

#endif
