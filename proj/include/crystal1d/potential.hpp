#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crystal1d/formula.hpp"

namespace crystal1d {

enum class AntiderivativeMode { Exact, Numeric };

/// One piece of a piecewise potential. The domain is the half-open interval
/// [lo, hi); the first piece has lo = -inf and the last has hi = +inf, so a
/// breakpoint is owned by the piece that starts there.
struct Piece {
  double lo;
  double hi;
  Formula formula;
};

/// A potential g given as finitely many elementary pieces covering the real
/// line. Construction validates the covering (ordered, contiguous, unbounded
/// at both ends) and each formula's parameters, and evaluates the owning
/// piece at the origin exactly; that value is retained and surfaced through
/// check_admissible rather than by sampling. Values are immutable after
/// construction and all member functions are safe to call concurrently.
class Potential {
 public:
  explicit Potential(std::vector<Piece> pieces,
                     AntiderivativeMode mode = AntiderivativeMode::Exact);

  double eval(double x) const;
  double operator()(double x) const { return eval(x); }

  /// The antiderivative G with G(0) = 0. Exact mode uses per-piece closed
  /// forms accumulated across breakpoints; numeric mode integrates g from 0
  /// adaptively to 1e-10. Throws QuadratureNonconvergence in numeric mode if
  /// refinement hits the depth limit.
  double antiderivative(double x) const;

  /// Integral of g over [lo, hi] (signed if lo > hi). Exact mode is a
  /// difference of antiderivatives; numeric mode integrates adaptively to
  /// abs_tol, subdividing at non-smooth points.
  double integrate(double lo, double hi, double abs_tol = 1e-9) const;

  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }
  AntiderivativeMode antiderivative_mode() const { return mode_; }

  /// Breakpoints plus formula-intrinsic kinks (power kink at 0, tabulated
  /// nodes), sorted. Used to place quadrature subdivisions and to keep
  /// finite-difference probes away from non-smooth locations.
  const std::vector<double>& nonsmooth_points() const { return nonsmooth_; }

  /// g(0) evaluated exactly from the owning piece's formula.
  double origin_value() const { return origin_value_; }

  Potential reflected() const;
  Potential with_mode(AntiderivativeMode mode) const;

 private:
  std::vector<Piece> pieces_;
  std::vector<double> breakpoints_;  // interior piece boundaries, sorted
  std::vector<double> nonsmooth_;
  AntiderivativeMode mode_;
  double origin_value_ = 0.0;
  // Per-piece additive constants making the exact antiderivative continuous
  // across breakpoints and zero at the origin.
  std::vector<double> offsets_;

  std::size_t piece_index(double x) const;
  double exact_antiderivative(double x) const;
  double numeric_integral(double lo, double hi, double abs_tol) const;
};

enum class ViolationKind {
  NegativeValue,
  NonzeroAtOrigin,
  MonotonicityBreakRight,
  MonotonicityBreakLeft,
};

struct Violation {
  double location;
  ViolationKind kind;
};

struct AdmissibilityReport {
  bool is_admissible = true;
  std::vector<Violation> violations;
  int samples_used = 0;
};

/// Samples g on [-window, window] (origin, window ends, breakpoints and
/// tabulated nodes always included) and flags: nonzero value at the origin
/// (checked exactly, not sampled), negative values, strict decreases between
/// consecutive samples at or right of 0, strict increases at or left of 0.
/// Monotonicity comparisons use absolute slack 1e-12. A sampler can only
/// refute admissibility, not certify it; samples_used records the density.
AdmissibilityReport check_admissible(const Potential& p, double window, int n_samples);

enum class ZeroStructureTag {
  ZeroOnRightHalfLine,
  ZeroOnLeftPositiveOnRight,
  PositiveOnBothSides,
};

struct ZeroStructure {
  ZeroStructureTag tag = ZeroStructureTag::ZeroOnRightHalfLine;
  std::optional<double> witness_right;  // g(witness) > 1e-12, witness > 0
  std::optional<double> witness_left;   // g(witness) > 1e-12, witness < 0
  double scanned_to = 0.0;              // largest window actually scanned
};

/// Looks for witnesses g(x) > 1e-12 on each side of the origin within
/// [-window, window], doubling the window up to cap before declaring a side
/// identically zero. For admissible potentials monotonicity makes the finite
/// scan sound up to the cap, which is recorded in scanned_to. The default cap
/// is 2^16 * max(1, window).
ZeroStructure classify_zero_structure(const Potential& p, double window, double cap = 0.0);

/// scale * |x| as a single piece.
Potential make_abs(double scale = 1.0);

/// scale * |x|^exponent as a single piece; exponent must be positive.
Potential make_power(double exponent, double scale = 1.0);

}  // namespace crystal1d
