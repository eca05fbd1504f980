#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace crystal1d {

/// An open interval (lo, hi) with positive length.
struct Interval {
  double lo;
  double hi;

  double length() const { return hi - lo; }
};

bool operator==(const Interval& a, const Interval& b);

/// A finite union of disjoint open intervals in canonical form: sorted, with
/// strict separation (previous.hi < next.lo). Construct via canonicalize().
class IntervalUnion {
 public:
  IntervalUnion() = default;

  const std::vector<Interval>& intervals() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }

  /// Total length, the Lebesgue measure of the union.
  double measure() const;

  /// Counting measure of the topological boundary: two endpoints per part.
  int boundary_count() const;

  /// Clips at the origin and returns (negative part, positive part); the two
  /// measures add back to measure() exactly (the clip reuses endpoint values).
  std::pair<IntervalUnion, IntervalUnion> split_signed() const;

  IntervalUnion translated(double shift) const;
  IntervalUnion reflected() const;

 private:
  friend IntervalUnion canonicalize(std::vector<Interval> raw);
  std::vector<Interval> parts_;
};

bool operator==(const IntervalUnion& a, const IntervalUnion& b);

/// Sorts, drops zero-length intervals, merges overlapping or touching ones.
/// Throws std::invalid_argument if any raw interval has lo > hi or a non-finite
/// endpoint.
IntervalUnion canonicalize(std::vector<Interval> raw);

/// Set difference a \ b as a canonical union.
IntervalUnion difference(const IntervalUnion& a, const IntervalUnion& b);

/// Set intersection a ∩ b as a canonical union.
IntervalUnion intersection(const IntervalUnion& a, const IntervalUnion& b);

}  // namespace crystal1d
