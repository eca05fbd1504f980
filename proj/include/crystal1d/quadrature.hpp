#pragma once

#include <cmath>
#include <utility>

#include "crystal1d/errors.hpp"

namespace crystal1d {

namespace detail {

template <class F>
double simpson_recurse(const F& f, double a, double m, double b, double fa, double fm, double fb,
                       double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double h = b - a;
  const double left = (h / 12.0) * (fa + 4.0 * flm + fm);
  const double right = (h / 12.0) * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  if (depth <= 0) {
    throw QuadratureNonconvergence("adaptive quadrature did not converge within the depth limit");
  }
  return simpson_recurse(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson integration of f over [a, b] with an absolute tolerance.
/// Throws QuadratureNonconvergence when the local refinement exceeds max_depth.
template <class F>
double adaptive_simpson(const F& f, double a, double b, double abs_tol, int max_depth = 48) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
  return detail::simpson_recurse(f, a, m, b, fa, fm, fb, whole, abs_tol, max_depth);
}

}  // namespace crystal1d
