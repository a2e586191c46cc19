#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "ckspace/observables.hpp"

// Hamilton's equations from the analytic gradient and trajectory
// integration with conserved-quantity monitoring. The default integrator is
// an embedded Dormand-Prince 5(4) pair with PI-free step control; an
// implicit-midpoint mode with fixed step is available for long-horizon
// runs. Geodesic flow is the U = 0 case.

namespace ckspace {

// (qdot, pdot) = (dH/dp, -dH/dq) in the order
// (r, theta, phi, p_r, p_theta, p_phi).
std::array<double, 6> hamiltons_rhs(const Observable& hamiltonian,
                                    const PhasePoint& pt);

enum class IntegrationMethod { AdaptiveRK, ImplicitMidpoint };

struct IntegrateOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double initial_step = 1e-3;
  double min_step = 1e-14;
  double max_step = 0.5;
  IntegrationMethod method = IntegrationMethod::AdaptiveRK;
  double fixed_step = 1e-3;      // implicit midpoint only
  double guard_margin = 1e-6;    // stop before denominators get this small
  // Returns the smallest active denominator magnitude at a point; when
  // unset every point counts as regular. See singularity_guard().
  std::function<double(const PhasePoint&)> guard;
};

enum class TrajectoryStatus { Completed, SingularityApproach, StepFailure };

const char* trajectory_status_name(TrajectoryStatus status);

struct TrajectorySample {
  double t;
  PhasePoint pt;
  std::vector<double> watched;  // values of the watched observables
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  std::vector<std::string> watched_names;
  TrajectoryStatus status = TrajectoryStatus::Completed;
  std::string message;
  struct Meta {
    std::string integrator;
    double rtol = 0.0;
    double atol = 0.0;
  } meta;

  // max_t |w(t) - w(0)| / max(1, |w(0)|) for watched observable `index`.
  double max_relative_drift(std::size_t index) const;
};

// Smallest active denominator for the given potential on its space:
// chart factors S_{k1}(r), S_{k2}(theta), the radial-term denominators
// (C_{k1}(r) for SW, S_{k1}(r) for GKC/KC) and each active barrier
// denominator.
std::function<double(const PhasePoint&)> singularity_guard(
    const PotentialSpec& spec, const CKParams& params);

// Integrates Hamilton's equations from pt0 over [0, t_end], recording the
// watched observables at every accepted step. Stops early with status
// SingularityApproach when the guard dips below guard_margin (or an
// evaluation throws), StepFailure when the step underflows min_step.
Trajectory integrate(const Observable& hamiltonian, const PhasePoint& pt0,
                     double t_end, const std::vector<Observable>& watch,
                     const IntegrateOptions& opts = {});

// CSV columns: t,r,theta,phi,p_r,p_theta,p_phi,<watched names...>,
// 17 significant digits.
void write_csv(std::ostream& out, const Trajectory& trajectory);

}  // namespace ckspace
