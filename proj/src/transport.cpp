#include "crystal1d/transport.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "crystal1d/energy.hpp"
#include "crystal1d/errors.hpp"

namespace crystal1d {

namespace {

constexpr double kContractionSlack = 1e-12;

// The sub-union of u between cumulative measures c0 and c1 (0 <= c0 <= c1 <=
// measure(u)), walking parts left to right.
IntervalUnion cumulative_slice(const IntervalUnion& u, double c0, double c1) {
  std::vector<Interval> kept;
  double seen = 0.0;
  for (const Interval& part : u.intervals()) {
    const double len = part.length();
    const double lo_cut = std::max(c0 - seen, 0.0);
    const double hi_cut = std::min(c1 - seen, len);
    if (hi_cut > lo_cut) kept.push_back({part.lo + lo_cut, part.lo + hi_cut});
    seen += len;
    if (seen >= c1) break;
  }
  return canonicalize(std::move(kept));
}

// The point at cumulative measure c into u.
double point_at_cumulative(const IntervalUnion& u, double c) {
  double seen = 0.0;
  for (const Interval& part : u.intervals()) {
    const double len = part.length();
    if (c <= seen + len) return part.lo + (c - seen);
    seen += len;
  }
  return u.intervals().back().hi;
}

}  // namespace

double TransportPlan::apply(double x) const {
  // Locate the last segment starting at or before x; callers sample the
  // interior of the source, where this is the owning segment.
  auto it = std::upper_bound(segments.begin(), segments.end(), x,
                             [](double v, const TransportSegment& s) { return v < s.source.lo; });
  if (it == segments.begin()) return x + segments.front().shift;
  return x + (it - 1)->shift;
}

TransportPlan build_monotone_map(const IntervalUnion& e_plus) {
  if (e_plus.empty()) throw EmptySetError("transport needs a nonempty positive part");
  if (e_plus.intervals().front().lo < 0.0) {
    throw NotNonnegativeError("transport source set must lie in the right half line");
  }

  const double m_star = e_plus.measure();
  const IntervalUnion i_star = canonicalize({{0.0, m_star}});

  TransportPlan plan;
  plan.source = difference(e_plus, i_star);  // excess mass, right of I*
  plan.target = difference(i_star, e_plus);  // deficit inside I*

  if (plan.source.empty() || plan.target.empty()) {
    // E+ fills (0, m*) up to measure zero; nothing to move.
    return plan;
  }

  // Theorem consequence, asserted rather than assumed: everything to move
  // sits to the right of every hole it fills.
  if (plan.source.intervals().front().lo + kContractionSlack <
      plan.target.intervals().back().hi) {
    throw std::logic_error("transport source unexpectedly overlaps the target from the left");
  }

  // Align cumulative measures: the j-th unit of source mass (left to right)
  // lands on the j-th unit of target mass, which for indicator densities is a
  // translation on each matched stretch.
  const auto& src = plan.source.intervals();
  const auto& tgt = plan.target.intervals();
  std::size_t si = 0;
  std::size_t ti = 0;
  double s_pos = src[0].lo;
  double t_pos = tgt[0].lo;
  while (si < src.size() && ti < tgt.size()) {
    const double s_left = src[si].hi - s_pos;
    const double t_left = tgt[ti].hi - t_pos;
    const double len = std::min(s_left, t_left);
    if (len > 0.0) {
      plan.segments.push_back({{s_pos, s_pos + len}, t_pos - s_pos});
    }
    s_pos += len;
    t_pos += len;
    if (s_pos >= src[si].hi) {
      ++si;
      if (si < src.size()) s_pos = src[si].lo;
    }
    if (t_pos >= tgt[ti].hi) {
      ++ti;
      if (ti < tgt.size()) t_pos = tgt[ti].lo;
    }
  }
  return plan;
}

double verify_pushforward(const TransportPlan& plan, int n_bins) {
  if (n_bins < 1) throw std::invalid_argument("pushforward check needs at least one bin");
  if (plan.segments.empty()) return 0.0;

  const double total = plan.target.measure();
  double worst = 0.0;
  for (int b = 0; b < n_bins; ++b) {
    const double c0 = total * static_cast<double>(b) / n_bins;
    const double c1 = total * static_cast<double>(b + 1) / n_bins;
    const IntervalUnion bin = cumulative_slice(plan.target, c0, c1);
    // Preimage measure: each segment contributes the overlap of bin - shift
    // with its source stretch.
    double preimage = 0.0;
    for (const TransportSegment& seg : plan.segments) {
      const IntervalUnion pulled = bin.translated(-seg.shift);
      preimage += intersection(pulled, canonicalize({seg.source})).measure();
    }
    worst = std::max(worst, std::fabs(preimage - bin.measure()));
  }
  return worst;
}

bool verify_contraction(const TransportPlan& plan, int n_samples) {
  if (n_samples < 1) throw std::invalid_argument("contraction check needs at least one sample");
  if (plan.segments.empty()) return true;
  const double total = plan.source.measure();
  for (int j = 0; j < n_samples; ++j) {
    const double c = total * (static_cast<double>(j) + 0.5) / n_samples;
    const double x = point_at_cumulative(plan.source, c);
    if (plan.apply(x) > x + kContractionSlack) return false;
  }
  return true;
}

RearrangementReport rearrangement_check(const Potential& p, const IntervalUnion& u) {
  constexpr double kSlack = 1e-9;
  RearrangementReport report;
  const auto [neg, pos] = u.split_signed();

  if (!pos.empty()) {
    report.positive.lhs = potential_energy(p, pos);
    report.positive.rhs = p.integrate(0.0, pos.measure());
    report.positive.holds = report.positive.lhs >= report.positive.rhs - kSlack;
  }

  if (!neg.empty()) {
    // Mirror the set and the potential; the negative-side inequality becomes
    // the positive-side one for the reflected data.
    const Potential mirrored = p.reflected();
    const IntervalUnion neg_mirrored = neg.reflected();
    report.negative.lhs = potential_energy(mirrored, neg_mirrored);
    report.negative.rhs = mirrored.integrate(0.0, neg_mirrored.measure());
    report.negative.holds = report.negative.lhs >= report.negative.rhs - kSlack;
  }

  report.holds = report.positive.holds && report.negative.holds;
  return report;
}

}  // namespace crystal1d
