#ifndef NEMINEQ_MINIMIZE_HPP
#define NEMINEQ_MINIMIZE_HPP

#include <cmath>
#include <utility>

namespace nemineq {

struct MinResult {
  double x;
  double value;
};

/// Golden-section search on [lo, hi]. Converges to the minimizer of a
/// unimodal f; for monotone f it converges to the boundary.
template <typename F>
MinResult golden_section_min(F&& f, double lo, double hi, double x_tol,
                             int max_iter = 400) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iter && (b - a) > x_tol; ++i) {
    if (fc < fd) {
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
  }
  const double xm = 0.5 * (a + b);
  return MinResult{xm, f(xm)};
}

template <typename F>
MinResult golden_section_max(F&& f, double lo, double hi, double x_tol,
                             int max_iter = 400) {
  auto neg = [&f](double x) { return -f(x); };
  MinResult m = golden_section_min(neg, lo, hi, x_tol, max_iter);
  return MinResult{m.x, -m.value};
}

}  // namespace nemineq

#endif  // NEMINEQ_MINIMIZE_HPP
