#pragma once

// Shared fixtures for the unit and acceptance suites: the builtin potential
// families, a deterministic cross-platform RNG, and random set generators.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "crystal1d/intervals.hpp"
#include "crystal1d/potential.hpp"

namespace testsupport {

using namespace crystal1d;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline Potential abs_potential() { return make_abs(); }

inline Potential quadratic() {
  return Potential({{-kInf, kInf, Polynomial{{0.0, 0.0, 1.0}}}});
}

/// g = -2x on the left half line, x on the right.
inline Potential asym_linear() {
  return Potential({{-kInf, 0.0, Polynomial{{0.0, -2.0}}},
                    {0.0, kInf, Polynomial{{0.0, 1.0}}}});
}

/// g = max(x, 0): identically zero on the left half line.
inline Potential one_sided_ramp() {
  return Potential({{-kInf, 0.0, Polynomial{{0.0}}},
                    {0.0, kInf, Polynomial{{0.0, 1.0}}}});
}

/// g = e^|x| - 1, written as two exponential pieces.
inline Potential exp_two_sided() {
  return Potential({{-kInf, 0.0, Exponential{1.0, -1.0, -1.0}},
                    {0.0, kInf, Exponential{1.0, 1.0, -1.0}}});
}

inline Potential zero_potential() {
  return Potential({{-kInf, kInf, Polynomial{{0.0}}}});
}

/// g = 0 on [-1, 1] and |x| - 1 outside: a flat valley, so the optimal
/// translation is non-unique for small masses.
inline Potential flat_valley() {
  return Potential({{-kInf, -1.0, Polynomial{{-1.0, -1.0}}},
                    {-1.0, 1.0, Polynomial{{0.0}}},
                    {1.0, kInf, Polynomial{{-1.0, 1.0}}}});
}

/// sin^2(x) sampled on [-half_width, half_width]: admissibility must reject it
/// (it decreases past pi/2 on the right and mirrors on the left).
inline Potential sin_squared(double half_width = 4.0, double dx = 0.01) {
  std::vector<double> xs;
  std::vector<double> ys;
  const int n = static_cast<int>(std::llround(2.0 * half_width / dx));
  xs.reserve(static_cast<std::size_t>(n) + 1);
  ys.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    const double x = -half_width + dx * i;
    const double s = std::sin(x);
    xs.push_back(x);
    ys.push_back(s * s);
  }
  return Potential({{-kInf, kInf, Tabulated(std::move(xs), std::move(ys))}});
}

inline Potential neg_quadratic() {
  return Potential({{-kInf, kInf, Polynomial{{0.0, 0.0, -1.0}}}});
}

struct NamedPotential {
  std::string name;
  Potential p;
};

/// The five families exercised by the oracle-based theorem check.
inline std::vector<NamedPotential> theorem_families() {
  std::vector<NamedPotential> out;
  out.push_back({"abs", abs_potential()});
  out.push_back({"quadratic", quadratic()});
  out.push_back({"asym-linear", asym_linear()});
  out.push_back({"one-sided-ramp", one_sided_ramp()});
  out.push_back({"exp-two-sided", exp_two_sided()});
  return out;
}

/// All builtin admissible families, including the degenerate ones.
inline std::vector<NamedPotential> admissible_families() {
  std::vector<NamedPotential> out = theorem_families();
  out.push_back({"zero", zero_potential()});
  out.push_back({"flat-valley", flat_valley()});
  return out;
}

/// Deterministic RNG with a platform-independent uniform mapping (the
/// standard distributions are implementation-defined, which would break
/// byte-identical expectations across toolchains).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    const int span = hi - lo + 1;
    int k = static_cast<int>(uniform01() * span);
    if (k >= span) k = span - 1;
    return lo + k;
  }

 private:
  std::mt19937_64 eng_;
};

/// A random canonical union of 1..max_parts intervals inside [lo, hi] with
/// measure bounded away from zero.
inline IntervalUnion random_union(Rng& rng, double lo, double hi, int max_parts) {
  while (true) {
    const int parts = rng.uniform_int(1, max_parts);
    std::vector<double> cuts;
    cuts.reserve(static_cast<std::size_t>(2 * parts));
    for (int i = 0; i < 2 * parts; ++i) cuts.push_back(rng.uniform(lo, hi));
    std::sort(cuts.begin(), cuts.end());
    std::vector<Interval> raw;
    raw.reserve(static_cast<std::size_t>(parts));
    for (int i = 0; i < parts; ++i) raw.push_back({cuts[2 * i], cuts[2 * i + 1]});
    IntervalUnion u = canonicalize(std::move(raw));
    if (u.measure() > 1e-6) return u;
  }
}

/// A random canonical union inside [0, hi]: a valid E+ for transport checks.
inline IntervalUnion random_positive_union(Rng& rng, double hi, int max_parts) {
  return random_union(rng, 0.0, hi, max_parts);
}

}  // namespace testsupport
