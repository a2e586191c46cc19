// Acceptance suite: one pass/fail line per criterion, exit nonzero when any
// fails. All tolerances are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ckspace/dynamics.hpp"
#include "ckspace/verify.hpp"
#include "support/dynamics_cells.hpp"

using namespace ckspace;

namespace {

constexpr double kB0 = 0.7, kB1 = 0.3, kB2 = 0.45, kB3 = 0.6, kK = 1.2;
constexpr std::uint64_t kSeed = 1;

int g_failures = 0;

void report(int number, const std::string& what, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", number,
              what.c_str(), detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

CheckSpec make_spec(const CKParams& space, const PotentialSpec& pot,
                    int points = 100) {
  CheckSpec spec;
  spec.space = space;
  spec.potential = pot;
  spec.points = points;
  spec.seed = kSeed;
  return spec;
}

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const auto& [name, p] : canonical_spaces()) {
    for (Gen a : kAllGenerators)
      for (Gen b : kAllGenerators) {
        const Eigen::Matrix4d ma = generator_matrix(a, p);
        const Eigen::Matrix4d mb = generator_matrix(b, p);
        Eigen::Matrix4d expect = Eigen::Matrix4d::Zero();
        const AlgebraElement e = lie_bracket(a, b, p);
        for (Gen c : kAllGenerators) expect += e[c] * generator_matrix(c, p);
        worst = std::max(worst,
                         ((ma * mb - mb * ma) - expect).cwiseAbs().maxCoeff());
      }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(1, "matrix commutators reproduce the 15 structure constants",
         worst <= 1e-14 && seconds < 1.0,
         "residual " + fmt(worst) + " <= 1e-14, " + fmt(seconds) + " s");
}

void criterion_2() {
  double worst = 0.0;
  for (const auto& [name, p] : canonical_spaces()) {
    std::vector<Observable> gens;
    for (Gen g : kAllGenerators) gens.push_back(generator(g, p));
    const Observable t = kinetic_energy(p);
    const PointSampler sampler(kSeed);
    for (int n = 0; n < 100; ++n) {
      const PhasePoint pt = sampler.at(n);
      for (int a = 0; a < 6; ++a) {
        worst = std::max(worst, std::fabs(poisson_bracket(t, gens[a], pt)));
        for (int b = a + 1; b < 6; ++b) {
          const AlgebraElement e =
              lie_bracket(kAllGenerators[a], kAllGenerators[b], p);
          double expect = 0.0;
          for (int c = 0; c < 6; ++c) expect += e.coeffs[c] * gens[c].value(pt);
          worst = std::max(
              worst, std::fabs(poisson_bracket(gens[a], gens[b], pt) - expect));
        }
      }
    }
  }
  report(2, "realized generators close the brackets and commute with T",
         worst <= 1e-9, "residual " + fmt(worst) + " <= 1e-9, 100 pts/space");
}

void criterion_3() {
  double worst = 0.0;
  for (const auto& [name, p] : canonical_spaces()) {
    std::vector<Observable> gens;
    for (Gen g : kAllGenerators) gens.push_back(generator(g, p));
    const Observable t = kinetic_energy(p);
    const PointSampler sampler(kSeed);
    for (int n = 0; n < 100; ++n) {
      const PhasePoint pt = sampler.at(n);
      std::array<double, 6> vals;
      for (int i = 0; i < 6; ++i) vals[i] = gens[i].value(pt);
      worst = std::max(worst, std::fabs(2.0 * p.kappa2 * t.value(pt) -
                                        casimir_c1(vals, p)));
      worst = std::max(worst, std::fabs(casimir_c2(vals, p)));
    }
  }
  report(3, "casimir identities 2 k2 T = C1 and C2 = 0", worst <= 1e-10,
         "residual " + fmt(worst) + " <= 1e-10");
}

void criterion_4() {
  double worst_analytic = 0.0;
  double worst_fd = 0.0;
  for (const auto& [name, p] : canonical_spaces()) {
    const PointSampler sampler(kSeed);
    for (int n = 0; n < 10; ++n) {
      const PolarPoint q = sampler.at(n).q;
      const CurvatureReport rep = riemann_ricci(q, p);
      worst_analytic =
          std::max(worst_analytic, std::fabs(rep.scalar - 6.0 * p.kappa1));
      for (double s : rep.sectional)
        worst_analytic = std::max(worst_analytic, std::fabs(s - p.kappa1));
      const CurvatureResiduals res = curvature_residuals(q, p);
      worst_fd = std::max({worst_fd, res.christoffel_fd, res.riemann_fd,
                           res.sectional_dev, res.scalar_dev});
    }
  }
  report(4, "sectional curvatures = k1 and K = 6 k1, analytic vs FD",
         worst_analytic <= 1e-9 && worst_fd <= 1e-6,
         "analytic " + fmt(worst_analytic) + ", fd " + fmt(worst_fd) +
             " <= 1e-6");
}

void criterion_5() {
  double worst = 0.0;
  bool ranks_ok = true;
  const PotentialSpec pot = PotentialSpec::family(
      kB1, kB2, kB3, [](double r) { return 0.5 * r * r; },
      [](double r) { return r; });
  for (const auto& [name, p] : canonical_spaces()) {
    const CheckSpec spec = make_spec(p, pot);
    const Observable h = hamiltonian(pot, p);
    const RotationIntegrals rot = integrals_rotation(pot, p);
    const Observable i123 = integral_i123(pot, p);
    for (const auto& rep :
         {involution_sweep({rot.i12, i123, h}, spec),
          involution_sweep({rot.i23, i123, h}, spec)})
      worst = std::max(worst, rep.checks[0].max_abs_residual);
    ranks_ok =
        ranks_ok &&
        independence_rank({rot.i12, rot.i23, i123, h}, spec) == 4;
  }
  report(5, "family involution sets and rank {I12,I23,I123,H} = 4",
         worst <= 1e-8 && ranks_ok,
         "bracket " + fmt(worst) + " <= 1e-8, rank 4 on all spaces");
}

void criterion_6() {
  const PotentialSpec pot = PotentialSpec::sw(kB0, kB1, kB2, kB3);
  double worst_bracket = 0.0;
  double worst_constraint = 0.0;
  bool ranks_ok = true;
  for (const auto& [name, p] : canonical_spaces()) {
    const CheckSpec spec = make_spec(p, pot);
    const Observable h = hamiltonian(pot, p);
    const SWIntegrals swi = integrals_sw(pot, p);
    const RotationIntegrals rot = integrals_rotation(pot, p);
    const Observable i123 = integral_i123(pot, p);
    const PointSampler sampler(kSeed);
    for (int n = 0; n < spec.points; ++n) {
      const PhasePoint pt = sampler.at(n);
      worst_bracket = std::max(
          {worst_bracket, std::fabs(poisson_bracket(swi.i01, h, pt)),
           std::fabs(poisson_bracket(swi.i02, h, pt)),
           std::fabs(poisson_bracket(swi.i03, h, pt))});
      worst_constraint = std::max(
          worst_constraint,
          std::fabs(2.0 * p.kappa2 * h.value(pt) -
                    (p.kappa2 * swi.i01.value(pt) + swi.i02.value(pt) +
                     swi.i03.value(pt) + p.kappa1 * i123.value(pt))));
    }
    ranks_ok = ranks_ok && independence_rank(
                               {swi.i01, rot.i12, rot.i23, i123, h}, spec) == 5;
  }
  report(6, "SW integrals commute, constraint holds, rank = 5",
         worst_bracket <= 1e-8 && worst_constraint <= 1e-10 && ranks_ok,
         "bracket " + fmt(worst_bracket) + ", constraint " +
             fmt(worst_constraint) + ", rank 5");
}

void criterion_7() {
  double worst = 0.0;
  bool ranks_ok = true;
  for (const auto& [name, p] : canonical_spaces()) {
    // L_i conserved for each GKC_i, rank 5 with L_i adjoined.
    const PotentialSpec specs[3] = {PotentialSpec::gkc1(kK, kB2, kB3),
                                    PotentialSpec::gkc2(kK, kB1, kB3),
                                    PotentialSpec::gkc3(kK, kB1, kB2)};
    for (int i = 1; i <= 3; ++i) {
      const PotentialSpec& pot = specs[i - 1];
      const CheckSpec spec = make_spec(p, pot);
      const Observable h = hamiltonian(pot, p);
      const Observable li = integral_L(i, pot, p);
      const RotationIntegrals rot = integrals_rotation(pot, p);
      const Observable i123 = integral_i123(pot, p);
      const PointSampler sampler(kSeed);
      for (int n = 0; n < spec.points; ++n)
        worst = std::max(worst,
                         std::fabs(poisson_bracket(li, h, sampler.at(n))));
      ranks_ok = ranks_ok &&
                 independence_rank({li, rot.i12, rot.i23, i123, h}, spec) == 5;
    }
    // Second beta zero: the companion L_j is conserved too.
    {
      const PotentialSpec pot = PotentialSpec::gkc3(kK, kB1, 0.0);
      const Observable h = hamiltonian(pot, p);
      const Observable l2 = integral_L(2, pot, p);
      const PointSampler sampler(kSeed);
      for (int n = 0; n < 100; ++n)
        worst = std::max(worst,
                         std::fabs(poisson_bracket(l2, h, sampler.at(n))));
    }
    // All betas zero: the three LRL components commute with H_KC.
    {
      const PotentialSpec pot = PotentialSpec::kc(kK);
      const Observable h = hamiltonian(pot, p);
      const auto lrl = lrl_vector(kK, p);
      const PointSampler sampler(kSeed);
      for (int n = 0; n < 100; ++n) {
        const PhasePoint pt = sampler.at(n);
        for (const Observable& l : lrl)
          worst = std::max(worst, std::fabs(poisson_bracket(l, h, pt)));
      }
    }
  }
  report(7, "GKC L_i conserved (rank 5), companion L_j, and the LRL vector",
         worst <= 1e-8 && ranks_ok,
         "bracket " + fmt(worst) + " <= 1e-8, ranks 5");
}

void criterion_8() {
  const PotentialSpec sw = PotentialSpec::sw(kB0, kB1, kB2, kB3);
  double worst = 0.0;
  int used_total = 0;
  // Oscillator rewrites on S3, AdS, dS.
  for (const char* name : {"s3", "ads", "ds"}) {
    const CKParams p = *CKParams::preset(name);
    const Observable u = potential(sw, p);
    const PointSampler sampler(kSeed);
    int used = 0;
    for (int n = 0; n < 200 && used < 50; ++n) {
      const PolarPoint q = sampler.at(n).q;
      try {
        worst = std::max(worst, std::fabs(sw_alternate_form(sw, p, q) -
                                          u.value({q, 0, 0, 0})));
        ++used;
      } catch (const BranchError&) {
      }
    }
    used_total += used;
  }
  // Distance forms of the family, SW and GKC potentials on all six spaces.
  for (const auto& [name, p] : canonical_spaces()) {
    const PotentialSpec pots[4] = {sw, PotentialSpec::gkc1(kK, kB2, kB3),
                                   PotentialSpec::gkc2(kK, kB1, kB3),
                                   PotentialSpec::gkc3(kK, kB1, kB2)};
    for (const PotentialSpec& pot : pots) {
      const Observable u = potential(pot, p);
      const PointSampler sampler(kSeed);
      int used = 0;
      for (int n = 0; n < 200 && used < 50; ++n) {
        const PolarPoint q = sampler.at(n).q;
        try {
          worst = std::max(worst, std::fabs(potential_distance_form(pot, p, q) -
                                            u.value({q, 0, 0, 0})));
          ++used;
        } catch (const BranchError&) {
        }
      }
      used_total += used;
    }
  }
  report(8, "oscillator rewrites and distance forms agree pointwise",
         worst <= 1e-10 && used_total > 1000,
         "residual " + fmt(worst) + " <= 1e-10, " +
             std::to_string(used_total) + " comparisons");
}

void criterion_9() {
  // Circular Kepler orbit on E3.
  bool orbit_ok = true;
  double orbit_dev = 0.0;
  {
    const CKParams p = CKParams::euclidean();
    const PotentialSpec pot = PotentialSpec::kc(1.0);
    const Observable h = hamiltonian(pot, p);
    std::vector<Observable> watch{h.renamed("H")};
    const RotationIntegrals rot = integrals_rotation(pot, p);
    watch.push_back(rot.i23);
    watch.push_back(integral_i123(pot, p));
    watch.push_back(lrl_vector(1.0, p)[2]);
    IntegrateOptions opts;
    opts.guard = singularity_guard(pot, p);
    const Trajectory traj = integrate(
        h, {{1.0, std::asin(1.0), 0.0}, 0.0, 0.0, 1.0}, 10.0, watch, opts);
    orbit_ok = traj.status == TrajectoryStatus::Completed;
    for (const TrajectorySample& s : traj.samples)
      orbit_dev = std::max(orbit_dev, std::fabs(s.pt.q.r - 1.0));
    orbit_ok = orbit_ok && orbit_dev <= 1e-8;
    for (std::size_t w = 0; w < watch.size(); ++w)
      orbit_ok = orbit_ok && traj.max_relative_drift(w) <= 1e-6;
  }

  // Drift across every (space, potential) cell.
  double worst_drift = 0.0;
  bool cells_ok = true;
  for (const cells::DriftCell& cell : cells::drift_cells()) {
    const CKParams p = *CKParams::preset(cell.space);
    const Observable h = hamiltonian(cell.spec, p);
    const auto watch = cells::watch_for(cell.spec, p);
    IntegrateOptions opts;
    opts.guard = singularity_guard(cell.spec, p);

    bool done = false;
    if (cell.sampled) {
      const PointSampler sampler(2026);
      for (int n = 0; n < 25 && !done; ++n) {
        const PhasePoint pt0 = sampler.at(n);
        if (opts.guard(pt0) < 10 * opts.guard_margin) continue;
        const Trajectory traj = integrate(h, pt0, 10.0, watch, opts);
        if (traj.status != TrajectoryStatus::Completed) continue;
        for (std::size_t w = 0; w < watch.size(); ++w)
          worst_drift = std::max(worst_drift, traj.max_relative_drift(w));
        done = true;
      }
    } else {
      const Trajectory traj = integrate(h, cell.ic, 10.0, watch, opts);
      if (traj.status == TrajectoryStatus::Completed) {
        for (std::size_t w = 0; w < watch.size(); ++w)
          worst_drift = std::max(worst_drift, traj.max_relative_drift(w));
        done = true;
      }
    }
    cells_ok = cells_ok && done;
  }
  report(9, "circular KC orbit and <= 1e-6 integral drift on every cell",
         orbit_ok && cells_ok && worst_drift <= 1e-6,
         "orbit dev " + fmt(orbit_dev) + " <= 1e-8, drift " +
             fmt(worst_drift) + " <= 1e-6");
}

void criterion_10() {
  const CKParams p = CKParams::euclidean();
  const PotentialSpec sw = PotentialSpec::sw(kB0, kB1, kB2, kB3);
  const PotentialSpec g3 = PotentialSpec::gkc3(kK, kB1, kB2);
  const Observable usw = potential(sw, p);
  const Observable ug3 = potential(g3, p);
  const PointSampler sampler(kSeed);
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const PolarPoint q = sampler.at(n).q;
    const DistanceTriple d = distances(q, p);
    const double r2 = d.x * d.x + d.y * d.y + d.z * d.z;
    const double sw_cart = kB0 * r2 + kB1 / (d.x * d.x) +
                           kB2 / (d.y * d.y) + kB3 / (d.z * d.z);
    const double g3_cart = -kK / std::sqrt(r2) + kB1 / (d.x * d.x) +
                           kB2 / (d.y * d.y);
    worst = std::max(worst, std::fabs(usw.value({q, 0, 0, 0}) - sw_cart));
    worst = std::max(worst, std::fabs(ug3.value({q, 0, 0, 0}) - g3_cart));
  }
  report(10, "flat contraction matches the Cartesian SW and GKC3 forms",
         worst <= 1e-12, "residual " + fmt(worst) + " <= 1e-12");
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::printf("acceptance suite: %d failure(s), %.1f s\n", g_failures,
              seconds);
  return g_failures == 0 ? 0 : 1;
}
