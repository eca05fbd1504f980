#pragma once

#include <stdexcept>

namespace crystal1d {

/// A potential description (file or programmatic pieces) is structurally invalid.
struct SpecParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature hit its depth limit before reaching the requested tolerance.
struct QuadratureNonconvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation that needs a set of positive measure was given the empty union.
struct EmptySetError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The sampled admissibility check rejected the potential.
struct NotAdmissibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MassNonpositiveError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Transport construction requires a set contained in the right half line.
struct NotNonnegativeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The oracle grid admits no union whose measure is close enough to the mass.
struct NoCandidatesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A case-specific routine was called for a potential in a different case.
struct WrongCaseError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace crystal1d
