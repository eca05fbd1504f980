#pragma once

#include "crystal1d/intervals.hpp"
#include "crystal1d/potential.hpp"

namespace crystal1d {

/// The two summands of the free energy E(E) = H0(boundary) + integral of g.
struct EnergyBreakdown {
  int surface = 0;        // counting measure of the boundary
  double potential = 0.0; // integral of g over the set
  double total = 0.0;     // surface + potential
};

/// Integral of g over the union: sum over parts of G(hi) - G(lo) in exact
/// mode, adaptive quadrature subdivided at non-smooth points otherwise.
/// Absolute tolerance abs_tol applies per interval.
double potential_energy(const Potential& p, const IntervalUnion& u, double abs_tol = 1e-9);

/// Free energy of a nonempty union. Throws EmptySetError on the empty union:
/// with a positive mass constraint the empty set is never a competitor.
EnergyBreakdown free_energy(const Potential& p, const IntervalUnion& u);

/// Potential energy of the translated interval (a, a+m):
/// h(a) = G(a+m) - G(a).
double interval_energy_profile(const Potential& p, double m, double a);

}  // namespace crystal1d
