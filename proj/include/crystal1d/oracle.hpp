#pragma once

#include <cstdint>
#include <functional>

#include "crystal1d/energy.hpp"
#include "crystal1d/intervals.hpp"
#include "crystal1d/potential.hpp"

namespace crystal1d {

/// Exhaustive-search configuration: unions of up to k_max grid-aligned
/// intervals inside [-window, window] whose total measure is within
/// mass_slack of mass.
struct OracleConfig {
  double window = 4.0;
  double grid_step = 0.02;
  int k_max = 3;
  double mass = 1.0;
  double mass_slack = 0.0;  // 0 means the default grid_step/4

  /// Throws std::invalid_argument when a field is out of range (grid_step
  /// <= 0, k_max < 1, mass outside (0, 2*window], or mass_slack >=
  /// grid_step/2, which would admit off-by-one-cell candidates).
  void validate() const;

  double effective_mass_slack() const { return mass_slack > 0.0 ? mass_slack : grid_step / 4.0; }
};

struct OracleReport {
  IntervalUnion best_union;
  EnergyBreakdown best_energy;
  bool best_is_single_interval = false;
  double analytic_energy = 0.0;  // from minimize_translation
  double gap = 0.0;              // best_energy.total - analytic_energy
  std::int64_t candidates_evaluated = 0;
  // Dual-route check of the convexification argument: on every k >= 2
  // candidate E the interval (-|E-|, |E+|) must score strictly lower.
  std::int64_t convexification_checked = 0;
  std::int64_t convexification_failures = 0;
  bool best_touches_window = false;  // optimum on the search boundary: window too small
  double discretization_bound = 0.0; // computed tolerance for verify_theorem
};

/// Visits every canonical union of k <= k_max grid intervals with total
/// measure within the slack of cfg.mass, in deterministic (k, then
/// lexicographic) order. Used by tests to cross-check enumeration counts;
/// oracle_minimize fuses the same enumeration with evaluation.
void enumerate_candidates(const OracleConfig& cfg,
                          const std::function<void(const IntervalUnion&)>& visit);

/// Exhaustively evaluates the free energy over the candidate family and
/// returns the argmin with deterministic tie-breaking (fewer intervals first,
/// then leftmost endpoints). Also runs the convexification dominance check on
/// every multi-interval candidate and compares the optimum against
/// minimize_translation's analytic energy. Throws NotAdmissibleError if p
/// fails the sampled admissibility check, NoCandidatesError if the grid admits
/// no candidate within the mass slack.
OracleReport oracle_minimize(const Potential& p, const OracleConfig& cfg);

/// True iff the grid optimum is a single interval and its energy exceeds the
/// analytic minimum by at most tol_energy. When tol_energy <= 0 the report's
/// computed discretization bound is used: grid snapping can misplace each
/// endpoint by one cell and misstate the mass by the slack, which costs at
/// most max(g(alpha - step), g(alpha + m + step)) * (2*step) plus quadrature
/// slack 1e-6.
bool verify_theorem(const Potential& p, const OracleConfig& cfg, double tol_energy = 0.0);

}  // namespace crystal1d
