#include "crystal1d/energy.hpp"

#include "crystal1d/errors.hpp"

namespace crystal1d {

double potential_energy(const Potential& p, const IntervalUnion& u, double abs_tol) {
  double total = 0.0;
  for (const Interval& part : u.intervals()) {
    total += p.integrate(part.lo, part.hi, abs_tol);
  }
  return total;
}

EnergyBreakdown free_energy(const Potential& p, const IntervalUnion& u) {
  if (u.empty()) {
    throw EmptySetError("free energy of the empty set is undefined under a mass constraint");
  }
  EnergyBreakdown out;
  out.surface = u.boundary_count();
  out.potential = potential_energy(p, u);
  out.total = static_cast<double>(out.surface) + out.potential;
  return out;
}

double interval_energy_profile(const Potential& p, double m, double a) {
  if (!(m > 0.0)) throw MassNonpositiveError("interval energy profile needs positive mass");
  return p.antiderivative(a + m) - p.antiderivative(a);
}

}  // namespace crystal1d
