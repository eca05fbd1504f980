#include "crystal1d/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace crystal1d {

bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }

bool operator==(const IntervalUnion& a, const IntervalUnion& b) {
  return a.intervals() == b.intervals();
}

double IntervalUnion::measure() const {
  double total = 0.0;
  for (const Interval& part : parts_) total += part.length();
  return total;
}

int IntervalUnion::boundary_count() const { return 2 * static_cast<int>(parts_.size()); }

std::pair<IntervalUnion, IntervalUnion> IntervalUnion::split_signed() const {
  IntervalUnion neg;
  IntervalUnion pos;
  for (const Interval& part : parts_) {
    if (part.hi <= 0.0) {
      neg.parts_.push_back(part);
    } else if (part.lo >= 0.0) {
      pos.parts_.push_back(part);
    } else {
      // The clip reuses the endpoint values, so the two halves' lengths sum
      // back to the original length exactly.
      neg.parts_.push_back({part.lo, 0.0});
      pos.parts_.push_back({0.0, part.hi});
    }
  }
  return {std::move(neg), std::move(pos)};
}

IntervalUnion IntervalUnion::translated(double shift) const {
  IntervalUnion out;
  out.parts_.reserve(parts_.size());
  for (const Interval& part : parts_) out.parts_.push_back({part.lo + shift, part.hi + shift});
  return out;
}

IntervalUnion IntervalUnion::reflected() const {
  IntervalUnion out;
  out.parts_.reserve(parts_.size());
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    out.parts_.push_back({-it->hi, -it->lo});
  }
  return out;
}

IntervalUnion canonicalize(std::vector<Interval> raw) {
  for (const Interval& r : raw) {
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi)) {
      throw std::invalid_argument("interval endpoints must be finite");
    }
    if (r.lo > r.hi) {
      throw std::invalid_argument("interval must satisfy lo <= hi");
    }
  }
  std::sort(raw.begin(), raw.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
  IntervalUnion out;
  for (const Interval& r : raw) {
    if (r.lo == r.hi) continue;  // degenerate: measure zero, drop
    if (!out.parts_.empty() && r.lo <= out.parts_.back().hi) {
      // Touching intervals merge: same measure and potential energy as the
      // joined interval, strictly fewer boundary points.
      out.parts_.back().hi = std::max(out.parts_.back().hi, r.hi);
    } else {
      out.parts_.push_back(r);
    }
  }
  return out;
}

IntervalUnion difference(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<Interval> kept;
  const auto& cut = b.intervals();
  for (const Interval& part : a.intervals()) {
    double lo = part.lo;
    for (const Interval& c : cut) {
      if (c.hi <= lo) continue;
      if (c.lo >= part.hi) break;
      if (c.lo > lo) kept.push_back({lo, c.lo});
      lo = std::max(lo, c.hi);
      if (lo >= part.hi) break;
    }
    if (lo < part.hi) kept.push_back({lo, part.hi});
  }
  return canonicalize(std::move(kept));
}

IntervalUnion intersection(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<Interval> kept;
  const auto& as = a.intervals();
  const auto& bs = b.intervals();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < as.size() && j < bs.size()) {
    const double lo = std::max(as[i].lo, bs[j].lo);
    const double hi = std::min(as[i].hi, bs[j].hi);
    if (lo < hi) kept.push_back({lo, hi});
    if (as[i].hi < bs[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return canonicalize(std::move(kept));
}

}  // namespace crystal1d
