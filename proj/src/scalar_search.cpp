#include "qcb/scalar_search.hpp"

#include <cmath>

#include "qcb/errors.hpp"

namespace qcb {

ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo,
                                      double hi, double tol, int max_iter) {
  if (!(lo < hi)) throw ValidationError("golden-section bracket must satisfy lo < hi");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int evals = 2;
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++evals;
  }
  const double x = 0.5 * (a + b);
  double fx = f(x);
  ++evals;
  // the midpoint is not guaranteed to beat the interior probes on flat tails
  if (fc < fx) return {c, fc, evals};
  if (fd < fx) return {d, fd, evals};
  return {x, fx, evals};
}

}  // namespace qcb
