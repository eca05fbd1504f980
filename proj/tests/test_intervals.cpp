#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "crystal1d/intervals.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crystal1d;
using testsupport::Rng;

namespace {

IntervalUnion make(std::vector<Interval> raw) { return canonicalize(std::move(raw)); }

}  // namespace

TEST_CASE("canonicalize merges touching and overlapping intervals") {
  CHECK(make({{0.0, 1.0}, {1.0, 2.0}}) == make({{0.0, 2.0}}));
  CHECK(make({{0.0, 1.0}, {2.0, 3.0}}).intervals() ==
        std::vector<Interval>{{0.0, 1.0}, {2.0, 3.0}});
  CHECK(make({{0.0, 2.0}, {1.0, 3.0}, {5.0, 5.0}}) == make({{0.0, 3.0}}));
  CHECK(make({}).empty());
  CHECK(make({{2.0, 2.0}}).empty());
  // Unsorted input is sorted.
  CHECK(make({{3.0, 4.0}, {0.0, 1.0}}).intervals() ==
        std::vector<Interval>{{0.0, 1.0}, {3.0, 4.0}});
}

TEST_CASE("canonicalize rejects inverted or non-finite intervals") {
  CHECK_THROWS_AS(make({{1.0, 0.0}}), std::invalid_argument);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(make({{0.0, inf}}), std::invalid_argument);
  CHECK_THROWS_AS(make({{std::nan(""), 1.0}}), std::invalid_argument);
}

TEST_CASE("canonicalize is idempotent") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const IntervalUnion u = testsupport::random_union(rng, -5.0, 5.0, 4);
    CHECK(canonicalize(u.intervals()) == u);
  }
}

TEST_CASE("measure adds lengths and never exceeds the raw total") {
  CHECK(make({{0.0, 1.0}, {2.0, 3.0}}).measure() == 2.0);
  CHECK(make({}).measure() == 0.0);
  CHECK(make({{-0.5, 0.5}}).measure() == 1.0);

  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Interval> raw;
    double raw_total = 0.0;
    for (int i = 0; i < 3; ++i) {
      double a = rng.uniform(-5.0, 5.0);
      double b = rng.uniform(-5.0, 5.0);
      if (a > b) std::swap(a, b);
      raw.push_back({a, b});
      raw_total += b - a;
    }
    CHECK(canonicalize(raw).measure() <= raw_total + 1e-12);
  }
}

TEST_CASE("boundary_count is two per interval") {
  CHECK(make({{0.0, 1.0}}).boundary_count() == 2);
  CHECK(make({{0.0, 1.0}, {2.0, 3.0}}).boundary_count() == 4);
  CHECK(make({}).boundary_count() == 0);

  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const IntervalUnion u = testsupport::random_union(rng, -5.0, 5.0, 4);
    CHECK(u.boundary_count() == 2 * static_cast<int>(u.size()));
    CHECK(u.boundary_count() >= 2);
  }
}

TEST_CASE("split_signed clips at the origin and preserves measure") {
  const auto [neg1, pos1] = make({{-1.0, 1.0}}).split_signed();
  CHECK(neg1 == make({{-1.0, 0.0}}));
  CHECK(pos1 == make({{0.0, 1.0}}));

  const auto [neg2, pos2] = make({{1.0, 2.0}}).split_signed();
  CHECK(neg2.empty());
  CHECK(pos2 == make({{1.0, 2.0}}));

  const auto [neg3, pos3] = make({{-3.0, -1.0}, {2.0, 4.0}}).split_signed();
  CHECK(neg3 == make({{-3.0, -1.0}}));
  CHECK(pos3 == make({{2.0, 4.0}}));

  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const IntervalUnion u = testsupport::random_union(rng, -5.0, 5.0, 4);
    const auto [neg, pos] = u.split_signed();
    CHECK(std::fabs(neg.measure() + pos.measure() - u.measure()) <= 1e-15 * (1.0 + u.measure()));
    for (const Interval& part : neg.intervals()) CHECK(part.hi <= 0.0);
    for (const Interval& part : pos.intervals()) CHECK(part.lo >= 0.0);
  }
}

TEST_CASE("translated and reflected are measure-preserving") {
  const IntervalUnion u = make({{-1.0, 0.5}, {2.0, 3.0}});
  const IntervalUnion t = u.translated(2.5);
  CHECK(t == make({{1.5, 3.0}, {4.5, 5.5}}));
  CHECK(t.measure() == doctest::Approx(u.measure()));
  const IntervalUnion r = u.reflected();
  CHECK(r == make({{-3.0, -2.0}, {-0.5, 1.0}}));
  CHECK(r.reflected() == u);
}

TEST_CASE("difference and intersection behave as set operations") {
  const IntervalUnion a = make({{0.0, 2.0}, {3.0, 4.0}});
  const IntervalUnion b = make({{0.5, 1.0}, {3.5, 5.0}});
  CHECK(difference(a, b) == make({{0.0, 0.5}, {1.0, 2.0}, {3.0, 3.5}}));
  CHECK(intersection(a, b) == make({{0.5, 1.0}, {3.5, 4.0}}));
  CHECK(difference(a, a).empty());
  CHECK(intersection(a, IntervalUnion{}).empty());

  Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const IntervalUnion x = testsupport::random_union(rng, -5.0, 5.0, 3);
    const IntervalUnion y = testsupport::random_union(rng, -5.0, 5.0, 3);
    // |x| = |x ∖ y| + |x ∩ y|
    CHECK(std::fabs(difference(x, y).measure() + intersection(x, y).measure() - x.measure()) <=
          1e-12);
  }
}
