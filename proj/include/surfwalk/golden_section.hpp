#ifndef SURFWALK_GOLDEN_SECTION_HPP_
#define SURFWALK_GOLDEN_SECTION_HPP_

#include <cmath>  // for sqrt

namespace surfwalk {

  struct ScalarMinimum {
    double x;
    double value;
    int    iterations;
  };

  // Golden-section search for a minimum of a unimodal f on [a, b], stopping
  // once the bracket is narrower than tol. One evaluation per iteration.
  template <typename F>
  ScalarMinimum golden_section_minimize(F&& f, double a, double b, double tol) {
    double const inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double       c       = b - inv_phi * (b - a);
    double       d       = a + inv_phi * (b - a);
    double       fc      = f(c);
    double       fd      = f(d);
    int          iterations = 0;
    while (b - a > tol) {
      ++iterations;
      if (fc <= fd) {
        b  = d;
        d  = c;
        fd = fc;
        c  = b - inv_phi * (b - a);
        fc = f(c);
      } else {
        a  = c;
        c  = d;
        fc = fd;
        d  = a + inv_phi * (b - a);
        fd = f(d);
      }
    }
    double x  = (a + b) / 2.0;
    double fx = f(x);
    return {x, fx, iterations};
  }

  template <typename F>
  ScalarMinimum golden_section_maximize(F&& f, double a, double b, double tol) {
    auto r = golden_section_minimize([&f](double x) { return -f(x); }, a, b, tol);
    return {r.x, -r.value, r.iterations};
  }

}  // namespace surfwalk

#endif  // SURFWALK_GOLDEN_SECTION_HPP_
