#ifndef HOLES2D_CONFIG_IO_HPP
#define HOLES2D_CONFIG_IO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "holes2d/geometry.hpp"

namespace holes2d {

// Boundary data in declarative form, compiled to a BoundaryFn against the
// curve it lives on (the curve supplies normals for flux-type data and the
// node layout for tabulated data).
struct DataFunctionSpec {
  std::string kind;  // constant | fourier | point-source-trace | custom-table
  double value = 0.0;                        // constant
  double c0 = 0.0;                           // fourier
  std::vector<double> cos_coeffs, sin_coeffs;
  Vec2 q{0.0, 0.0};                          // point-source-trace
  bool normal_derivative = false;
  std::vector<double> table;                 // custom-table, one value per node

  BoundaryFn compile(const ParametrizedCurve& curve) const;
};

// Evaluation point lists for the three observation scales.
struct ExperimentPoints {
  std::vector<Vec2> macro;  // physical points in the perforated domain
  std::vector<Vec2> micro;  // cluster-scale points t (physical x = rho1 t)
  std::vector<Vec2> layer;  // hole-scale points t (x = rho1 p_j + rho1 rho2 t)
};

struct LoadedConfig {
  ProblemConfig config;
  ExperimentPoints points;
  std::string canonical;  // canonical serialized form
  std::uint64_t hash = 0;
};

// Built-in experiment: unit-circle outer boundary, circular and elliptic
// holes anchored off-center, flux data with one nonzero and one zero mean,
// and a Dirichlet trace of a degree-two harmonic polynomial.
LoadedConfig default_config();
ExperimentPoints default_config_points();

LoadedConfig load_config(const std::string& path);
LoadedConfig parse_config(const std::string& json_text);

std::uint64_t fnv1a(const std::string& data);

}  // namespace holes2d

#endif
