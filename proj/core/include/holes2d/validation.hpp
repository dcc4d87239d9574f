#ifndef HOLES2D_VALIDATION_HPP
#define HOLES2D_VALIDATION_HPP

#include <string>
#include <vector>

#include "holes2d/geometry.hpp"

namespace holes2d {

// One deterministic solver check: pass iff measured <= bound when `at_most`,
// measured >= bound otherwise (used for fitted convergence orders).
struct ValidationCase {
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  bool at_most = true;
  bool pass = false;
};

struct ValidationSuite {
  std::vector<ValidationCase> cases;
  bool all_pass = false;
};

// Runs the method checks on the given configuration: interior Gauss flux,
// the unit-circle single-layer eigenpair, agreement of the rescaled system
// with the directly assembled mixed problem on the mapped geometry, discrete
// flux conservation, the enclosing-circle flux identity, consistency of the
// micro and layer observations, the finite-difference audit of the expansion
// coefficients (entries whose exact coefficient vanishes for this data are
// skipped), and the fitted order of the two-term remainder.  Reference size
// parameters (0.2, 0.3) must be admissible for the configuration.
ValidationSuite run_validation_suite(const ProblemConfig& config);

// Deterministic CSV rendering (name, measured, bound, sense, pass).
std::string validation_csv(const ValidationSuite& suite);

}  // namespace holes2d

#endif
