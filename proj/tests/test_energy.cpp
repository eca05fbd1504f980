#include <cmath>

#include "crystal1d/energy.hpp"
#include "crystal1d/errors.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace crystal1d;
using namespace testsupport;

namespace {

IntervalUnion make(std::vector<Interval> raw) { return canonicalize(std::move(raw)); }

}  // namespace

TEST_CASE("potential_energy reproduces closed-form integrals") {
  CHECK(potential_energy(quadratic(), make({{-0.5, 0.5}})) ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-13));
  CHECK(potential_energy(zero_potential(), make({{0.0, 5.0}})) == 0.0);
  CHECK(potential_energy(abs_potential(), make({{0.0, 1.0}, {2.0, 3.0}})) ==
        doctest::Approx(3.0).epsilon(1e-13));
  CHECK(potential_energy(abs_potential(), IntervalUnion{}) == 0.0);
}

TEST_CASE("potential_energy is additive over the parts") {
  Rng rng(47);
  for (const auto& [name, p] : admissible_families()) {
    CAPTURE(name);
    for (int trial = 0; trial < 50; ++trial) {
      const IntervalUnion u = random_union(rng, -5.0, 5.0, 4);
      double per_part = 0.0;
      for (const Interval& part : u.intervals()) {
        per_part += potential_energy(p, make({part}));
      }
      CHECK(std::fabs(potential_energy(p, u) - per_part) <= 1e-12 * (1.0 + std::fabs(per_part)));
    }
  }
}

TEST_CASE("free_energy composes surface and potential terms") {
  const EnergyBreakdown one = free_energy(quadratic(), make({{-0.5, 0.5}}));
  CHECK(one.surface == 2);
  CHECK(one.potential == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
  CHECK(one.total == doctest::Approx(2.0 + 1.0 / 12.0).epsilon(1e-13));
  CHECK(one.total == one.surface + one.potential);

  const EnergyBreakdown two = free_energy(quadratic(), make({{-1.0, -0.5}, {0.5, 1.0}}));
  CHECK(two.surface == 4);
  CHECK(two.potential == doctest::Approx(7.0 / 12.0).epsilon(1e-13));
  CHECK(two.total == doctest::Approx(4.0 + 7.0 / 12.0).epsilon(1e-13));

  const EnergyBreakdown flat = free_energy(zero_potential(), make({{3.0, 5.0}}));
  CHECK(flat.surface == 2);
  CHECK(flat.potential == 0.0);
  CHECK(flat.total == 2.0);
}

TEST_CASE("free_energy rejects the empty set") {
  CHECK_THROWS_AS(free_energy(abs_potential(), IntervalUnion{}), EmptySetError);
}

TEST_CASE("free_energy of any nonempty set is at least 2") {
  Rng rng(53);
  for (const auto& [name, p] : admissible_families()) {
    CAPTURE(name);
    for (int trial = 0; trial < 50; ++trial) {
      const IntervalUnion u = random_union(rng, -5.0, 5.0, 4);
      const EnergyBreakdown e = free_energy(p, u);
      CHECK(e.potential >= 0.0);
      CHECK(e.total >= 2.0);
      CHECK(e.total == doctest::Approx(e.surface + e.potential).epsilon(1e-15));
    }
  }
}

TEST_CASE("interval_energy_profile matches direct integration") {
  CHECK(interval_energy_profile(abs_potential(), 1.0, -0.5) ==
        doctest::Approx(0.25).epsilon(1e-13));
  CHECK(interval_energy_profile(zero_potential(), 2.0, 10.0) == 0.0);
  CHECK(interval_energy_profile(quadratic(), 1.0, 0.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-13));

  Rng rng(59);
  for (const auto& [name, p] : admissible_families()) {
    CAPTURE(name);
    for (int trial = 0; trial < 50; ++trial) {
      const double a = rng.uniform(-4.0, 3.0);
      const double m = rng.uniform(0.1, 2.0);
      const double h = interval_energy_profile(p, m, a);
      CHECK(h >= -1e-12);
      CHECK(std::fabs(h - potential_energy(p, make({{a, a + m}}))) <= 1e-10);
    }
  }
}

TEST_CASE("interval_energy_profile rejects non-positive mass") {
  CHECK_THROWS_AS(interval_energy_profile(abs_potential(), 0.0, 0.0), MassNonpositiveError);
  CHECK_THROWS_AS(interval_energy_profile(abs_potential(), -1.0, 0.0), MassNonpositiveError);
}

TEST_CASE("profile slope is non-decreasing on the bracket") {
  for (const auto& [name, p] : admissible_families()) {
    CAPTURE(name);
    const double m = 1.0;
    double prev = -kInf;
    for (int i = 0; i <= 200; ++i) {
      const double a = -m + m * i / 200.0;
      const double slope = p.eval(a + m) - p.eval(a);
      CHECK(slope >= prev - 1e-12);
      prev = slope;
    }
  }
}
