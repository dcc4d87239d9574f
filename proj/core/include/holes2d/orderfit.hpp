#ifndef HOLES2D_ORDERFIT_HPP
#define HOLES2D_ORDERFIT_HPP

#include <vector>

namespace holes2d {

// Least-squares fit of log(err) = slope * log(h) + intercept.  Errors are
// clipped at 1e-14 before taking logs; `clipped` reports whether any entry
// hit that floor (the slope is then a lower bound).
struct OrderFit {
  double slope = 0.0;
  double intercept = 0.0;
  bool clipped = false;
};

OrderFit fit_order(const std::vector<double>& h,
                   const std::vector<double>& err);

}  // namespace holes2d

#endif
