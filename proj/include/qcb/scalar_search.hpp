#pragma once

#include <functional>

namespace qcb {

struct ScalarMinimum {
  double x;
  double value;
  int evaluations;
};

// Golden-section search for the minimum of a unimodal function on [lo, hi],
// stopping once the bracket is narrower than `tol`.
ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo,
                                      double hi, double tol = 1e-9, int max_iter = 200);

// Interior bracket used for every s-minimization.
inline constexpr double kSLower = 1e-6;
inline constexpr double kSUpper = 1.0 - 1e-6;
inline constexpr double kSTol = 1e-9;

}  // namespace qcb
