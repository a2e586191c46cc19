#pragma once

#include <stdexcept>
#include <string>

namespace ckspace {

// Base class for every recoverable evaluation failure (poles, chart edges,
// barrier singularities). Verification sweeps catch this type to skip and
// count bad sample points.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// |C_kappa| fell below the pole tolerance in a tangent or 1/T term.
class PoleError : public EvaluationError {
 public:
  using EvaluationError::EvaluationError;
};

// Point outside the coordinate chart (e.g. space-like region when
// kappa2 < 0) or not on the quadric within tolerance.
class ChartError : public EvaluationError {
 public:
  using EvaluationError::EvaluationError;
};

// Polar metric factor S_{k1}(r) or S_{k2}(theta) vanished.
class DegenerateMetric : public EvaluationError {
 public:
  using EvaluationError::EvaluationError;
};

// Inversion target outside the principal branch of S_kappa (kappa > 0).
class BranchError : public EvaluationError {
 public:
  using EvaluationError::EvaluationError;
};

// An active centrifugal-barrier denominator vanished.
class SingularPotential : public EvaluationError {
 public:
  using EvaluationError::EvaluationError;
};

}  // namespace ckspace
