#pragma once

#include <stdexcept>
#include <string>

namespace evac {

/// Simplex pivot fell below the pivot tolerance even after a
/// refactorization retry; the model is numerically ill-conditioned.
struct NumericalBreakdown : std::runtime_error {
  explicit NumericalBreakdown(const std::string& what) : std::runtime_error(what) {}
};

/// Solution variables do not line up with the instance dimensions.
struct WrongProblemShape : std::runtime_error {
  explicit WrongProblemShape(const std::string& what) : std::runtime_error(what) {}
};

/// A discharge plan never reaches the total demand of some ramp.
struct IncompletePlan : std::runtime_error {
  explicit IncompletePlan(const std::string& what) : std::runtime_error(what) {}
};

/// The horizon-shrinking search failed even at the full horizon.
struct InfeasibleAtFullHorizon : std::runtime_error {
  explicit InfeasibleAtFullHorizon(const std::string& what) : std::runtime_error(what) {}
};

/// Uncertainty set with cumulative lower bounds above the per-ramp cap.
struct EmptySet : std::runtime_error {
  explicit EmptySet(const std::string& what) : std::runtime_error(what) {}
};

/// Rejection sampling hit its attempt cap; the cumulative caps are too tight.
struct SamplingExhausted : std::runtime_error {
  explicit SamplingExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct NonpositiveWeight : std::runtime_error {
  explicit NonpositiveWeight(const std::string& what) : std::runtime_error(what) {}
};

struct NegativeDelta : std::runtime_error {
  explicit NegativeDelta(const std::string& what) : std::runtime_error(what) {}
};

/// Scenario file could not be parsed or failed schema validation.
struct ScenarioError : std::runtime_error {
  explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace evac
