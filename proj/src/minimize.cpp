#include "crystal1d/minimize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "crystal1d/errors.hpp"

namespace crystal1d {

namespace {

constexpr double kBreakpointNudge = 1e-12;
constexpr int kGateSamples = 2001;

void require_admissible(const Potential& p, double window) {
  const AdmissibilityReport gate = check_admissible(p, window, kGateSamples);
  if (!gate.is_admissible) {
    throw NotAdmissibleError("potential fails the admissibility check with " +
                             std::to_string(gate.violations.size()) + " violation(s)");
  }
}

bool on_breakpoint(const Potential& p, double x) {
  return std::binary_search(p.breakpoints().begin(), p.breakpoints().end(), x);
}

// Profile slope s(a) = g(a+m) - g(a), non-decreasing on [-m, 0] for
// admissible g. A query landing exactly on a breakpoint of g is perturbed by
// 1e-12 into the current bracket; s stays monotone, so the one-sided value
// moves each detected edge by at most the nudge, far below tol.
double slope_at(const Potential& p, double m, double a, double lo, double hi) {
  if (on_breakpoint(p, a) || on_breakpoint(p, a + m)) {
    a += (hi - a >= a - lo) ? kBreakpointNudge : -kBreakpointNudge;
  }
  return p.eval(a + m) - p.eval(a);
}

}  // namespace

std::pair<double, double> bracket_alpha(const Potential& p, double m) {
  if (!(m > 0.0)) throw MassNonpositiveError("bracket requires positive mass");
  const ZeroStructure zs = classify_zero_structure(p, std::max(1.0, 2.0 * m));
  if (zs.tag != ZeroStructureTag::PositiveOnBothSides) {
    throw WrongCaseError("bracketing applies only when g is positive on both sides");
  }
  // g(a+m) - g(a) <= 0 for a <= -m and >= 0 for a >= 0 by two-sided
  // monotonicity, so the profile attains its minimum on [-m, 0].
  return {-m, 0.0};
}

MinimizerResult minimize_translation(const Potential& p, double m, double tol) {
  if (!(m > 0.0)) throw MassNonpositiveError("mass must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  require_admissible(p, 4.0 * std::max(1.0, m));

  MinimizerResult out;
  const ZeroStructure zs = classify_zero_structure(p, std::max(1.0, 2.0 * m));
  out.case_tag = zs.tag;

  double alpha_lo = 0.0;
  double alpha_hi = 0.0;
  switch (zs.tag) {
    case ZeroStructureTag::ZeroOnRightHalfLine:
      // g vanishes on [0, inf): (0, m) already has zero potential energy.
      alpha_lo = alpha_hi = 0.0;
      break;
    case ZeroStructureTag::ZeroOnLeftPositiveOnRight:
      // g vanishes on (-inf, 0]: slide the interval fully to the left.
      alpha_lo = alpha_hi = -m;
      break;
    case ZeroStructureTag::PositiveOnBothSides: {
      // The optimal translations form the flat stretch of the profile h,
      // i.e. the closure of {s = 0} inside [-m, 0] for the non-decreasing
      // slope s(a) = g(a+m) - g(a); bisect for each edge separately.
      const auto [lo0, hi0] = bracket_alpha(p, m);

      // Left edge: infimum of {s >= 0}.
      if (slope_at(p, m, lo0, lo0, hi0) >= 0.0) {
        alpha_lo = lo0;
      } else {
        double lo = lo0;  // s(lo) < 0
        double hi = hi0;  // s(hi) >= 0 (s(0) = g(m) >= 0)
        while (hi - lo > tol) {
          const double mid = 0.5 * (lo + hi);
          if (slope_at(p, m, mid, lo, hi) >= 0.0) {
            hi = mid;
          } else {
            lo = mid;
          }
        }
        alpha_lo = hi;
      }

      // Right edge: supremum of {s <= 0}.
      if (slope_at(p, m, hi0, lo0, hi0) <= 0.0) {
        alpha_hi = hi0;
      } else {
        double lo = lo0;  // s(lo) <= 0 (s(-m) = -g(-m) <= 0)
        double hi = hi0;  // s(hi) > 0
        while (hi - lo > tol) {
          const double mid = 0.5 * (lo + hi);
          if (slope_at(p, m, mid, lo, hi) <= 0.0) {
            lo = mid;
          } else {
            hi = mid;
          }
        }
        alpha_hi = lo;
      }

      // Bisection certifies each edge to tol; a discontinuous slope can make
      // the certified edges land a hair out of order around a unique root.
      if (alpha_hi < alpha_lo) std::swap(alpha_lo, alpha_hi);
      break;
    }
  }

  out.alpha_lo = alpha_lo;
  out.alpha_hi = alpha_hi;
  out.representative_alpha = 0.5 * (alpha_lo + alpha_hi);
  out.minimizer = canonicalize({{out.representative_alpha, out.representative_alpha + m}});
  out.energy = free_energy(p, out.minimizer);
  out.stationarity_residual = stationarity_residual(p, m, out.representative_alpha);
  out.origin_in_closure =
      out.representative_alpha <= 0.0 && 0.0 <= out.representative_alpha + m;
  return out;
}

double stationarity_residual(const Potential& p, double m, double a) {
  return std::fabs(p.eval(a + m) - p.eval(a));
}

namespace {

// True when sampling shows g strictly increasing on (0, w] and strictly
// decreasing on [-w, 0), with continued growth past the half-window probes.
bool strictly_growing_both_sides(const Potential& p, double w) {
  constexpr int kProbes = 257;
  double prev_r = p.eval(0.0);
  double prev_l = prev_r;
  for (int i = 1; i <= kProbes; ++i) {
    const double x = w * static_cast<double>(i) / kProbes;
    const double gr = p.eval(x);
    const double gl = p.eval(-x);
    if (!(gr > prev_r) || !(gl > prev_l)) return false;
    prev_r = gr;
    prev_l = gl;
  }
  return p.eval(w) > p.eval(w / 2.0) && p.eval(-w) > p.eval(-w / 2.0);
}

}  // namespace

bool verify_origin_membership(const MinimizerResult& r, const Potential& p) {
  const double m = r.minimizer.measure();
  const double a = r.representative_alpha;
  if (r.case_tag == ZeroStructureTag::PositiveOnBothSides &&
      strictly_growing_both_sides(p, 2.0 * std::max(1.0, m))) {
    return a < 0.0 && 0.0 < a + m;
  }
  return a <= 0.0 && 0.0 <= a + m;
}

}  // namespace crystal1d
