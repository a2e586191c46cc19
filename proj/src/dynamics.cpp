#include "ckspace/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace ckspace {

std::array<double, 6> hamiltons_rhs(const Observable& hamiltonian,
                                    const PhasePoint& pt) {
  const Grad6 g = hamiltonian.gradient(pt);
  return {g[3], g[4], g[5], -g[0], -g[1], -g[2]};
}

const char* trajectory_status_name(TrajectoryStatus status) {
  switch (status) {
    case TrajectoryStatus::Completed: return "completed";
    case TrajectoryStatus::SingularityApproach: return "singularity-approach";
    case TrajectoryStatus::StepFailure: return "step-failure";
  }
  return "?";
}

double Trajectory::max_relative_drift(std::size_t index) const {
  if (samples.empty() || index >= samples.front().watched.size()) return 0.0;
  const double w0 = samples.front().watched[index];
  const double scale = std::max(1.0, std::fabs(w0));
  double worst = 0.0;
  for (const TrajectorySample& s : samples)
    worst = std::max(worst, std::fabs(s.watched[index] - w0) / scale);
  return worst;
}

std::function<double(const PhasePoint&)> singularity_guard(
    const PotentialSpec& spec, const CKParams& params) {
  const double k1 = params.kappa1;
  const double k2 = params.kappa2;
  // The GKC/KC radial pole sits at S_{k1}(r) = 0, already covered by the
  // chart factor below.
  const bool sw_radial = spec.kind == PotentialKind::SW && spec.beta0 != 0.0;
  return [=](const PhasePoint& pt) {
    double m = std::fabs(sk(k1, pt.q.r));  // chart factor, always active
    m = std::min(m, std::fabs(sk(k2, pt.q.theta)));
    if (sw_radial) m = std::min(m, std::fabs(ck(k1, pt.q.r)));
    if (spec.beta1 != 0.0) m = std::min(m, std::fabs(ck(k2, pt.q.theta)));
    if (spec.beta2 != 0.0) m = std::min(m, std::fabs(std::cos(pt.q.phi)));
    if (spec.beta3 != 0.0) m = std::min(m, std::fabs(std::sin(pt.q.phi)));
    return m;
  };
}

namespace {

using State = std::array<double, 6>;

State to_state(const PhasePoint& pt) {
  return {pt.q.r, pt.q.theta, pt.q.phi, pt.p_r, pt.p_theta, pt.p_phi};
}

PhasePoint to_point(const State& y) {
  return PhasePoint{{y[0], y[1], y[2]}, y[3], y[4], y[5]};
}

// Dormand-Prince 5(4) coefficients (FSAL).
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
// Difference between the 5th-order weights and the embedded 4th-order ones.
constexpr double kE[7] = {71.0 / 57600,  0.0,          -71.0 / 16695,
                          71.0 / 1920,   -17253.0 / 339200,
                          22.0 / 525,    -1.0 / 40};

struct WatchedEval {
  static std::vector<double> values(const std::vector<Observable>& watch,
                                    const PhasePoint& pt) {
    std::vector<double> out;
    out.reserve(watch.size());
    for (const Observable& w : watch) out.push_back(w.value(pt));
    return out;
  }
};

Trajectory integrate_midpoint(const Observable& hamiltonian,
                              const PhasePoint& pt0, double t_end,
                              const std::vector<Observable>& watch,
                              const IntegrateOptions& opts) {
  Trajectory traj;
  traj.meta = {"implicit-midpoint", 0.0, 0.0};
  for (const Observable& w : watch) traj.watched_names.push_back(w.name());

  State y = to_state(pt0);
  double t = 0.0;
  traj.samples.push_back({t, pt0, WatchedEval::values(watch, pt0)});
  const double h = opts.fixed_step;

  try {
    while (t < t_end - 1e-15) {
      const double step = std::min(h, t_end - t);
      // Fixed-point iteration on the midpoint state.
      State z = y;
      for (int it = 0; it < 50; ++it) {
        const std::array<double, 6> f = hamiltons_rhs(hamiltonian, to_point(z));
        State znew;
        double delta = 0.0;
        for (int i = 0; i < 6; ++i) {
          znew[i] = y[i] + 0.5 * step * f[i];
          delta = std::max(delta, std::fabs(znew[i] - z[i]));
        }
        z = znew;
        if (delta < 1e-14) break;
      }
      for (int i = 0; i < 6; ++i) y[i] = 2.0 * z[i] - y[i];
      t += step;
      const PhasePoint pt = to_point(y);
      if (opts.guard && opts.guard(pt) < opts.guard_margin) {
        traj.status = TrajectoryStatus::SingularityApproach;
        traj.message = "guard margin reached";
        return traj;
      }
      traj.samples.push_back({t, pt, WatchedEval::values(watch, pt)});
    }
  } catch (const EvaluationError& err) {
    traj.status = TrajectoryStatus::SingularityApproach;
    traj.message = err.what();
  }
  return traj;
}

}  // namespace

Trajectory integrate(const Observable& hamiltonian, const PhasePoint& pt0,
                     double t_end, const std::vector<Observable>& watch,
                     const IntegrateOptions& opts) {
  if (opts.method == IntegrationMethod::ImplicitMidpoint)
    return integrate_midpoint(hamiltonian, pt0, t_end, watch, opts);

  Trajectory traj;
  traj.meta = {"dormand-prince-54", opts.rtol, opts.atol};
  for (const Observable& w : watch) traj.watched_names.push_back(w.name());

  if (opts.guard && opts.guard(pt0) < opts.guard_margin) {
    traj.samples.push_back({0.0, pt0, {}});
    traj.samples.back().watched.assign(watch.size(), 0.0);
    traj.status = TrajectoryStatus::SingularityApproach;
    traj.message = "initial point within guard margin";
    return traj;
  }

  State y = to_state(pt0);
  double t = 0.0;
  traj.samples.push_back({t, pt0, WatchedEval::values(watch, pt0)});

  std::array<State, 7> k;
  bool have_k0 = false;
  double h = std::min(opts.initial_step, t_end);

  auto rhs = [&hamiltonian](const State& s) -> State {
    const std::array<double, 6> f = hamiltons_rhs(hamiltonian, to_point(s));
    return {f[0], f[1], f[2], f[3], f[4], f[5]};
  };

  while (t < t_end - 1e-15) {
    h = std::min(h, t_end - t);
    if (h < opts.min_step) {
      traj.status = TrajectoryStatus::StepFailure;
      traj.message = "step size underflow";
      return traj;
    }

    bool eval_failed = false;
    State ynew{};
    double err = 0.0;
    try {
      if (!have_k0) {
        k[0] = rhs(y);
        have_k0 = true;
      }
      for (int s = 1; s < 7; ++s) {
        State ys = y;
        for (int j = 0; j < s; ++j)
          for (int i = 0; i < 6; ++i) ys[i] += h * kA[s][j] * k[j][i];
        k[s] = rhs(ys);
      }
      // Stage 7 is evaluated at the 5th-order solution (FSAL).
      for (int i = 0; i < 6; ++i) {
        ynew[i] = y[i];
        for (int j = 0; j < 6; ++j) ynew[i] += h * kA[6][j] * k[j][i];
      }
      double sum = 0.0;
      for (int i = 0; i < 6; ++i) {
        double e = 0.0;
        for (int j = 0; j < 7; ++j) e += kE[j] * k[j][i];
        e *= h;
        const double scale =
            opts.atol +
            opts.rtol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
        sum += (e / scale) * (e / scale);
      }
      err = std::sqrt(sum / 6.0);
    } catch (const EvaluationError&) {
      eval_failed = true;
    }

    if (eval_failed) {
      // A stage crossed a singular locus; retry with a smaller step and let
      // the min_step check classify a persistent failure.
      have_k0 = false;
      h *= 0.25;
      if (h < opts.min_step) {
        traj.status = TrajectoryStatus::SingularityApproach;
        traj.message = "evaluation failed near a singular locus";
        return traj;
      }
      continue;
    }

    if (err <= 1.0) {
      t += h;
      y = ynew;
      k[0] = k[6];  // FSAL
      const PhasePoint pt = to_point(y);
      if (opts.guard && opts.guard(pt) < opts.guard_margin) {
        traj.status = TrajectoryStatus::SingularityApproach;
        traj.message = "guard margin reached at t=" + std::to_string(t);
        return traj;
      }
      traj.samples.push_back({t, pt, WatchedEval::values(watch, pt)});
    } else {
      have_k0 = true;  // k[0] still valid at unchanged y
    }

    const double factor =
        (err == 0.0) ? 5.0
                     : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
    h = std::min(h * factor, opts.max_step);
  }
  return traj;
}

void write_csv(std::ostream& out, const Trajectory& trajectory) {
  out << "t,r,theta,phi,p_r,p_theta,p_phi";
  for (const std::string& name : trajectory.watched_names) out << ',' << name;
  out << '\n';
  char buf[32];
  auto put = [&](double v, bool lead_comma) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    if (lead_comma) out << ',';
    out << buf;
  };
  for (const TrajectorySample& s : trajectory.samples) {
    put(s.t, false);
    put(s.pt.q.r, true);
    put(s.pt.q.theta, true);
    put(s.pt.q.phi, true);
    put(s.pt.p_r, true);
    put(s.pt.p_theta, true);
    put(s.pt.p_phi, true);
    for (double w : s.watched) put(w, true);
    out << '\n';
  }
}

}  // namespace ckspace
