#pragma once

#include <tuple>
#include <vector>

#include "crystal1d/intervals.hpp"
#include "crystal1d/potential.hpp"

namespace crystal1d {

/// One piece of a monotone piecewise-translation map: x |-> x + shift on the
/// open source interval. Slope is identically 1, so the map preserves measure
/// on each piece by construction.
struct TransportSegment {
  Interval source;
  double shift;

  double apply(double x) const { return x + shift; }
};

/// The monotone transport between E+ \ I* and I* \ E+, where E+ is a union in
/// [0, inf) and I* = (0, |E+|). Segments are ordered left to right and the
/// map is non-decreasing across them.
struct TransportPlan {
  IntervalUnion source;  // E+ \ I*
  IntervalUnion target;  // I* \ E+
  std::vector<TransportSegment> segments;

  /// Evaluates the map at a point of the source (interior of some segment).
  double apply(double x) const;
};

/// Builds the unique monotone measure-preserving matching between the excess
/// mass E+ \ I* and the deficit I* \ E+ by aligning cumulative measures; with
/// indicator densities the matching is a piecewise translation. Throws
/// NotNonnegativeError if e_plus extends below 0, EmptySetError if e_plus is
/// empty. Returns an empty plan when E+ already equals I*.
TransportPlan build_monotone_map(const IntervalUnion& e_plus);

/// Partitions the target into n_bins equal-measure bins and compares each
/// bin's measure against the measure of its preimage under the plan; returns
/// the largest absolute discrepancy. Exact piecewise translations should sit
/// at rounding level (contract: <= 1e-10).
double verify_pushforward(const TransportPlan& plan, int n_bins);

/// True iff T(x) <= x + 1e-12 at n_samples uniform samples of the source
/// (vacuously true for an empty plan).
bool verify_contraction(const TransportPlan& plan, int n_samples);

struct RearrangementSide {
  double lhs = 0.0;  // integral of g over the given side of u
  double rhs = 0.0;  // integral of g over the rearranged interval at the origin
  bool holds = true; // lhs >= rhs - 1e-9
};

struct RearrangementReport {
  RearrangementSide positive;  // E+ against (0, |E+|)
  RearrangementSide negative;  // E- against (-|E-|, 0)
  bool holds = true;           // conjunction of the two sides
};

/// The rearrangement inequality on both sides of the origin: integrating g
/// over E+ dominates integrating it over (0,|E+|), and symmetrically for E-
/// (checked by reflecting x |-> -x and reusing the positive-side machinery).
RearrangementReport rearrangement_check(const Potential& p, const IntervalUnion& u);

}  // namespace crystal1d
