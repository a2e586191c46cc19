#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ckspace/observables.hpp"

// Numerical verification harness: involution sweeps over seeded sample
// points, functional-independence rank tests (SVD of the stacked gradient
// rows), analytic-vs-finite-difference gradient audits, and the exact
// identity suite. Sample points that hit a pole, barrier or branch edge
// are skipped and counted; a check fails outright if more than half of
// its points are skipped.

namespace ckspace {

struct CheckSpec {
  CKParams space = CKParams::euclidean();
  PotentialSpec potential;
  int points = 200;
  std::uint64_t seed = 1;
  double tol_bracket = 1e-8;
  double tol_rank = 1e-9;      // relative SVD threshold
  double tol_identity = 1e-10;
  double tol_gradient = 1e-7;
};

struct CheckRecord {
  std::string name;
  std::string kind;  // "bracket" | "rank" | "identity" | "gradient" | "matrix"
  double max_abs_residual = 0.0;
  int rank = -1;           // rank checks only
  int expected_rank = -1;  // rank checks only (upper bound when bound=true)
  bool rank_is_upper_bound = false;
  double tolerance = 0.0;
  int points_used = 0;
  int points_skipped = 0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<CheckRecord> checks;

  bool all_pass() const;
  void append(const VerificationReport& other);
};

// Max |{f, g}| over all pairs in `set` and the sampled points.
VerificationReport involution_sweep(const std::vector<Observable>& set,
                                    const CheckSpec& spec,
                                    const std::string& name = "involution");

// Numerical rank of the m x 6 gradient matrix, maximized over sample
// points (functional independence is generic, so one full-rank point
// certifies it). Singular values below tol_rank * sigma_max count as zero.
int independence_rank(const std::vector<Observable>& set,
                      const CheckSpec& spec);

// Record-producing wrapper around independence_rank. With
// `is_upper_bound` the check passes when the rank never exceeds
// `expected` at any sampled point.
CheckRecord rank_check(const std::string& name,
                       const std::vector<Observable>& set, int expected,
                       const CheckSpec& spec, bool is_upper_bound = false);

// Max deviation between the analytic gradient and central finite
// differences of the value (step 1e-6).
VerificationReport gradient_audit(const Observable& obs, const CheckSpec& spec,
                                  const std::string& name = "");

// Exact identities at the sweep tolerance tol_identity:
// 2 k2 T = C1 and C2 = 0 on the generator realization, the I123
// combination, separation consistency, the distance form of U, and (kind
// SW) the constraint 2 k2 H = k2 I01 + I02 + I03 + k1 I123 plus the
// per-space oscillator rewrites.
VerificationReport identity_suite(const CheckSpec& spec);

// Finite-difference cross-checks of the analytic curvature route:
// Christoffels rebuilt from metric derivatives (central step 1e-5) and the
// Riemann tensor rebuilt from Christoffel derivatives, plus the deviation
// of the sectional curvatures from kappa1 and of the scalar from 6 kappa1.
struct CurvatureResiduals {
  double christoffel_fd;
  double riemann_fd;
  double sectional_dev;
  double scalar_dev;
};
CurvatureResiduals curvature_residuals(const PolarPoint& q,
                                       const CKParams& params);

// Prebuilt check suites.
// geodesic_suite: structure constants (matrix route), generator brackets
// under the Poisson bracket, {T, J} = 0, Casimir identities, curvature,
// gradient audits.
VerificationReport geodesic_suite(const CheckSpec& spec);

// potential_suite: conservation, involution, independence ranks, identity
// and alternate-form checks for the configured potential kind.
VerificationReport potential_suite(const CheckSpec& spec);

}  // namespace ckspace
