#include "ckspace/verify.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace ckspace {

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.pass; });
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

// Skipped points are poles/barriers hit by the sampler. HalfPoints is the
// default guard against vacuous sweeps; MinimumSample applies to checks
// whose very domain excludes part of the box (the distance coordinates only
// exist on the principal branch, which covers roughly half of the AdS/dS
// sample box), where a fixed quorum of valid points is the meaningful rule.
enum class SkipPolicy { HalfPoints, MinimumSample };

// Runs fn over the sampled points, tracking skips; returns the max of the
// returned residuals.
template <typename Fn>
CheckRecord sweep(const std::string& name, const std::string& kind,
                  double tol, const CheckSpec& spec, Fn&& fn,
                  SkipPolicy policy = SkipPolicy::HalfPoints) {
  CheckRecord rec;
  rec.name = name;
  rec.kind = kind;
  rec.tolerance = tol;
  const PointSampler sampler(spec.seed);
  for (int i = 0; i < spec.points; ++i) {
    const PhasePoint pt = sampler.at(static_cast<std::uint64_t>(i));
    try {
      rec.max_abs_residual = std::max(rec.max_abs_residual, fn(pt));
      ++rec.points_used;
    } catch (const EvaluationError&) {
      ++rec.points_skipped;
    }
  }
  const bool enough =
      policy == SkipPolicy::HalfPoints
          ? rec.points_skipped <= spec.points / 2
          : rec.points_used >= std::min(spec.points, 8);
  rec.pass = rec.max_abs_residual <= tol && rec.points_used > 0 && enough;
  return rec;
}

}  // namespace

VerificationReport involution_sweep(const std::vector<Observable>& set,
                                    const CheckSpec& spec,
                                    const std::string& name) {
  VerificationReport report;
  report.checks.push_back(sweep(
      name, "bracket", spec.tol_bracket, spec, [&set](const PhasePoint& pt) {
        double worst = 0.0;
        for (std::size_t i = 0; i < set.size(); ++i)
          for (std::size_t j = i + 1; j < set.size(); ++j)
            worst = std::max(worst,
                             std::fabs(poisson_bracket(set[i], set[j], pt)));
        return worst;
      }));
  return report;
}

int independence_rank(const std::vector<Observable>& set,
                      const CheckSpec& spec) {
  const PointSampler sampler(spec.seed);
  int best = -1;
  for (int i = 0; i < spec.points; ++i) {
    const PhasePoint pt = sampler.at(static_cast<std::uint64_t>(i));
    try {
      Eigen::MatrixXd jac(static_cast<int>(set.size()), 6);
      for (std::size_t row = 0; row < set.size(); ++row) {
        const Grad6 g = set[row].gradient(pt);
        for (int col = 0; col < 6; ++col)
          jac(static_cast<int>(row), col) = g[col];
      }
      const Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
      const auto& sv = svd.singularValues();
      int rank = 0;
      if (sv.size() > 0 && sv(0) > 0.0) {
        const double cutoff = spec.tol_rank * sv(0);
        for (int s = 0; s < sv.size(); ++s)
          if (sv(s) > cutoff) ++rank;
      }
      best = std::max(best, rank);
    } catch (const EvaluationError&) {
    }
  }
  return best;
}

CheckRecord rank_check(const std::string& name,
                       const std::vector<Observable>& set, int expected,
                       const CheckSpec& spec, bool is_upper_bound) {
  CheckRecord rec;
  rec.name = name;
  rec.kind = "rank";
  rec.expected_rank = expected;
  rec.rank_is_upper_bound = is_upper_bound;
  rec.tolerance = spec.tol_rank;

  if (is_upper_bound) {
    // The bound must hold at every sampled point, so track the max rank
    // and the points individually.
    const PointSampler sampler(spec.seed);
    int worst = -1;
    for (int i = 0; i < spec.points; ++i) {
      const PhasePoint pt = sampler.at(static_cast<std::uint64_t>(i));
      try {
        Eigen::MatrixXd jac(static_cast<int>(set.size()), 6);
        for (std::size_t row = 0; row < set.size(); ++row) {
          const Grad6 g = set[row].gradient(pt);
          for (int col = 0; col < 6; ++col)
            jac(static_cast<int>(row), col) = g[col];
        }
        const Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
        const auto& sv = svd.singularValues();
        int rank = 0;
        if (sv.size() > 0 && sv(0) > 0.0) {
          const double cutoff = spec.tol_rank * sv(0);
          for (int s = 0; s < sv.size(); ++s)
            if (sv(s) > cutoff) ++rank;
        }
        worst = std::max(worst, rank);
        ++rec.points_used;
      } catch (const EvaluationError&) {
        ++rec.points_skipped;
      }
    }
    rec.rank = worst;
    rec.pass = worst >= 0 && worst <= expected &&
               rec.points_skipped <= spec.points / 2;
    return rec;
  }

  rec.rank = independence_rank(set, spec);
  rec.points_used = spec.points;
  rec.pass = rec.rank == expected;
  return rec;
}

VerificationReport gradient_audit(const Observable& obs, const CheckSpec& spec,
                                  const std::string& name) {
  constexpr double kStep = 1e-6;
  auto shifted = [](const PhasePoint& pt, int i, double d) {
    PhasePoint out = pt;
    double* fields[6] = {&out.q.r,  &out.q.theta, &out.q.phi,
                         &out.p_r, &out.p_theta, &out.p_phi};
    *fields[i] += d;
    return out;
  };
  VerificationReport report;
  report.checks.push_back(sweep(
      name.empty() ? "gradient-" + obs.name() : name, "gradient",
      spec.tol_gradient, spec, [&obs, &shifted](const PhasePoint& pt) {
        const Grad6 g = obs.gradient(pt);
        // Fourth-order central stencil: the box may sample close to a
        // potential pole (strong curvature moves T poles inside it), where
        // second-order truncation alone would exceed the gate. Noise also
        // scales with the value magnitude, so normalize large observables.
        const double scale = std::max(1.0, std::fabs(obs.value(pt)));
        double worst = 0.0;
        for (int i = 0; i < 6; ++i) {
          const double fd = (-obs.value(shifted(pt, i, 2.0 * kStep)) +
                             8.0 * obs.value(shifted(pt, i, kStep)) -
                             8.0 * obs.value(shifted(pt, i, -kStep)) +
                             obs.value(shifted(pt, i, -2.0 * kStep))) /
                            (12.0 * kStep);
          worst = std::max(worst, std::fabs(fd - g[i]) / scale);
        }
        return worst;
      }));
  return report;
}

VerificationReport identity_suite(const CheckSpec& spec) {
  VerificationReport report;
  const CKParams& space = spec.space;
  const double k2 = space.kappa2;

  const Observable t_obs = kinetic_energy(space);
  std::vector<Observable> gens;
  for (Gen g : kAllGenerators) gens.push_back(generator(g, space));

  report.checks.push_back(sweep(
      "casimir-2k2T-C1", "identity", spec.tol_identity, spec,
      [&](const PhasePoint& pt) {
        std::array<double, 6> vals;
        for (int i = 0; i < 6; ++i) vals[i] = gens[i].value(pt);
        return std::fabs(2.0 * k2 * t_obs.value(pt) -
                         casimir_c1(vals, space));
      }));
  report.checks.push_back(sweep(
      "casimir-C2", "identity", spec.tol_identity, spec,
      [&](const PhasePoint& pt) {
        std::array<double, 6> vals;
        for (int i = 0; i < 6; ++i) vals[i] = gens[i].value(pt);
        return std::fabs(casimir_c2(vals, space));
      }));

  const PotentialSpec& pot = spec.potential;
  const RotationIntegrals rot = integrals_rotation(pot, space);
  const Observable i123 = integral_i123(pot, space);
  const Observable h = hamiltonian(pot, space);
  const Observable u = potential(pot, space);
  const double combo_const =
      2.0 * k2 * (pot.beta1 + k2 * pot.beta2 + k2 * pot.beta3);

  report.checks.push_back(sweep(
      "i123-combination", "identity", spec.tol_identity, spec,
      [&](const PhasePoint& pt) {
        return std::fabs(rot.i12.value(pt) + rot.i13.value(pt) +
                         k2 * rot.i23.value(pt) + combo_const -
                         i123.value(pt));
      }));
  report.checks.push_back(sweep(
      "separation-consistency", "identity", spec.tol_identity, spec,
      [&](const PhasePoint& pt) {
        const SeparationValues sep = separation_values(pot, space, pt);
        return std::max({std::fabs(sep.h - h.value(pt)),
                         std::fabs(sep.i123 - i123.value(pt)),
                         std::fabs(sep.i23 - rot.i23.value(pt))});
      }));
  report.checks.push_back(sweep(
      "distance-form", "identity", spec.tol_identity, spec,
      [&](const PhasePoint& pt) {
        return std::fabs(potential_distance_form(pot, space, pt.q) -
                         u.value(pt));
      },
      SkipPolicy::MinimumSample));

  if (pot.kind == PotentialKind::SW) {
    const SWIntegrals swi = integrals_sw(pot, space);
    report.checks.push_back(sweep(
        "sw-constraint", "identity", spec.tol_identity, spec,
        [&](const PhasePoint& pt) {
          return std::fabs(2.0 * k2 * h.value(pt) -
                           (k2 * swi.i01.value(pt) + swi.i02.value(pt) +
                            swi.i03.value(pt) +
                            space.kappa1 * i123.value(pt)));
        }));
    if (space == CKParams::sphere() || space == CKParams::anti_de_sitter() ||
        space == CKParams::de_sitter()) {
      report.checks.push_back(sweep(
          "sw-alternate-form", "identity", spec.tol_identity, spec,
          [&](const PhasePoint& pt) {
            return std::fabs(sw_alternate_form(pot, space, pt.q) -
                             u.value(pt));
          },
          SkipPolicy::MinimumSample));
    }
  }
  return report;
}

CurvatureResiduals curvature_residuals(const PolarPoint& q,
                                       const CKParams& params) {
  constexpr double kStep = 1e-5;
  auto shifted = [](const PolarPoint& p, int i, double d) {
    PolarPoint out = p;
    double* fields[3] = {&out.r, &out.theta, &out.phi};
    *fields[i] += d;
    return out;
  };

  // Christoffels from metric derivatives (diagonal metric):
  // Gamma^k_ij = g^kk (d_i g_jk + d_j g_ik - d_k g_ij) / 2.
  double dg[3][3];  // dg[l][m] = d g_mm / d x_l
  const std::array<double, 3> g0 = metric_polar(q, params);
  for (int l = 0; l < 3; ++l) {
    const std::array<double, 3> gp = metric_polar(shifted(q, l, kStep), params);
    const std::array<double, 3> gm = metric_polar(shifted(q, l, -kStep), params);
    for (int m = 0; m < 3; ++m) dg[l][m] = (gp[m] - gm[m]) / (2.0 * kStep);
  }
  const Christoffel gamma = christoffel(q, params);
  double christoffel_fd = 0.0;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double di = (j == k) ? dg[i][k] : 0.0;
        const double dj = (i == k) ? dg[j][k] : 0.0;
        const double dk = (i == j) ? dg[k][i] : 0.0;
        const double fd = 0.5 / g0[k] * (di + dj - dk);
        christoffel_fd =
            std::max(christoffel_fd, std::fabs(fd - gamma[k][i][j]));
      }

  // Riemann from Christoffel derivatives:
  // R^i_jkl = d_k G^i_lj - d_l G^i_kj + G^i_km G^m_lj - G^i_lm G^m_kj.
  // The sectional/scalar contractions divide by g_phi_phi, which is small
  // near the sampling box corners, so the derivatives use a fourth-order
  // five-point stencil.
  constexpr double kStep4 = 1e-4;
  Christoffel dgamma[3];
  for (int l = 0; l < 3; ++l) {
    const Christoffel gp1 = christoffel(shifted(q, l, kStep4), params);
    const Christoffel gm1 = christoffel(shifted(q, l, -kStep4), params);
    const Christoffel gp2 = christoffel(shifted(q, l, 2.0 * kStep4), params);
    const Christoffel gm2 = christoffel(shifted(q, l, -2.0 * kStep4), params);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          dgamma[l][a][b][c] =
              (-gp2[a][b][c] + 8.0 * gp1[a][b][c] - 8.0 * gm1[a][b][c] +
               gm2[a][b][c]) /
              (12.0 * kStep4);
  }
  const CurvatureReport analytic = riemann_ricci(q, params);
  double riemann_fd = 0.0;
  double fd_riemann[3][3][3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          double val = dgamma[k][i][l][j] - dgamma[l][i][k][j];
          for (int m = 0; m < 3; ++m)
            val += gamma[i][k][m] * gamma[m][l][j] -
                   gamma[i][l][m] * gamma[m][k][j];
          fd_riemann[i][j][k][l] = val;
          riemann_fd = std::max(
              riemann_fd, std::fabs(val - analytic.riemann[i][j][k][l]));
        }

  // Sectional curvatures K_ij = R_{ijij}/(g_ii g_jj) = R^i_jij / g_jj from
  // the FD tensor, and the scalar from the Ricci contraction.
  double sectional_dev = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j)
        sectional_dev = std::max(
            sectional_dev,
            std::fabs(fd_riemann[i][j][i][j] / g0[j] - params.kappa1));

  double scalar = 0.0;
  for (int j = 0; j < 3; ++j) {
    double ricci_jj = 0.0;
    for (int m = 0; m < 3; ++m) ricci_jj += fd_riemann[m][j][m][j];
    scalar += ricci_jj / g0[j];
  }
  const double scalar_dev = std::fabs(scalar - 6.0 * params.kappa1);
  return CurvatureResiduals{christoffel_fd, riemann_fd, sectional_dev,
                            scalar_dev};
}

VerificationReport geodesic_suite(const CheckSpec& spec) {
  VerificationReport report;
  const CKParams& space = spec.space;

  // Structure constants through the 4x4 matrix commutators.
  {
    CheckRecord rec;
    rec.name = "structure-constants-matrix";
    rec.kind = "matrix";
    rec.tolerance = 1e-14;
    rec.points_used = 1;
    double worst = 0.0;
    for (Gen a : kAllGenerators)
      for (Gen b : kAllGenerators) {
        const Eigen::Matrix4d ma = generator_matrix(a, space);
        const Eigen::Matrix4d mb = generator_matrix(b, space);
        Eigen::Matrix4d expect = Eigen::Matrix4d::Zero();
        const AlgebraElement e = lie_bracket(a, b, space);
        for (Gen c : kAllGenerators)
          expect += e[c] * generator_matrix(c, space);
        worst = std::max(worst,
                         ((ma * mb - mb * ma) - expect).cwiseAbs().maxCoeff());
      }
    rec.max_abs_residual = worst;
    rec.pass = worst <= rec.tolerance;
    report.checks.push_back(rec);
  }

  std::vector<Observable> gens;
  for (Gen g : kAllGenerators) gens.push_back(generator(g, space));
  const Observable t_obs = kinetic_energy(space);

  // Proposition 1: the realized generators close the same brackets.
  report.checks.push_back(sweep(
      "generator-brackets", "bracket", 1e-9, spec,
      [&](const PhasePoint& pt) {
        double worst = 0.0;
        for (int a = 0; a < 6; ++a)
          for (int b = a + 1; b < 6; ++b) {
            const AlgebraElement e = lie_bracket(
                kAllGenerators[a], kAllGenerators[b], space);
            double expect = 0.0;
            for (int c = 0; c < 6; ++c)
              expect += e.coeffs[c] * gens[c].value(pt);
            worst = std::max(
                worst,
                std::fabs(poisson_bracket(gens[a], gens[b], pt) - expect));
          }
        return worst;
      }));
  report.checks.push_back(sweep(
      "kinetic-commutes", "bracket", 1e-9, spec, [&](const PhasePoint& pt) {
        double worst = 0.0;
        for (const Observable& g : gens)
          worst = std::max(worst, std::fabs(poisson_bracket(t_obs, g, pt)));
        return worst;
      }));

  {
    CheckSpec tight = spec;
    tight.tol_identity = 1e-10;
    const Observable t2 = t_obs;
    report.checks.push_back(sweep(
        "casimir-2k2T-C1", "identity", tight.tol_identity, tight,
        [&](const PhasePoint& pt) {
          std::array<double, 6> vals;
          for (int i = 0; i < 6; ++i) vals[i] = gens[i].value(pt);
          return std::fabs(2.0 * space.kappa2 * t2.value(pt) -
                           casimir_c1(vals, space));
        }));
    report.checks.push_back(sweep(
        "casimir-C2", "identity", tight.tol_identity, tight,
        [&](const PhasePoint& pt) {
          std::array<double, 6> vals;
          for (int i = 0; i < 6; ++i) vals[i] = gens[i].value(pt);
          return std::fabs(casimir_c2(vals, space));
        }));
  }

  report.checks.push_back(sweep(
      "curvature-analytic", "identity", 1e-9, spec,
      [&](const PhasePoint& pt) {
        const CurvatureReport rep = riemann_ricci(pt.q, space);
        double worst = std::fabs(rep.scalar - 6.0 * space.kappa1);
        for (double s : rep.sectional)
          worst = std::max(worst, std::fabs(s - space.kappa1));
        return worst;
      }));
  report.checks.push_back(sweep(
      "curvature-fd", "identity", 1e-6, spec, [&](const PhasePoint& pt) {
        const CurvatureResiduals res = curvature_residuals(pt.q, space);
        return std::max({res.christoffel_fd, res.riemann_fd,
                         res.sectional_dev, res.scalar_dev});
      }));

  for (const Observable& g : gens) report.append(gradient_audit(g, spec));
  report.append(gradient_audit(t_obs, spec));
  return report;
}

VerificationReport potential_suite(const CheckSpec& spec) {
  VerificationReport report;
  const CKParams& space = spec.space;
  const PotentialSpec& pot = spec.potential;

  const Observable h = hamiltonian(pot, space);
  const RotationIntegrals rot = integrals_rotation(pot, space);
  const Observable i123 = integral_i123(pot, space);

  report.checks.push_back(sweep(
      "conserves-rotation-integrals", "bracket", spec.tol_bracket, spec,
      [&](const PhasePoint& pt) {
        return std::max({std::fabs(poisson_bracket(rot.i12, h, pt)),
                         std::fabs(poisson_bracket(rot.i13, h, pt)),
                         std::fabs(poisson_bracket(rot.i23, h, pt)),
                         std::fabs(poisson_bracket(i123, h, pt))});
      }));
  report.append(
      involution_sweep({rot.i12, i123, h}, spec, "involution-I12-I123-H"));
  report.append(
      involution_sweep({rot.i23, i123, h}, spec, "involution-I23-I123-H"));

  // Generic non-involution: |{I12, I23}| must be visibly nonzero.
  {
    CheckRecord rec = sweep("non-involution-I12-I23", "bracket", 0.0, spec,
                            [&](const PhasePoint& pt) {
                              return std::fabs(
                                  poisson_bracket(rot.i12, rot.i23, pt));
                            });
    rec.tolerance = 1e-4;
    rec.pass = rec.max_abs_residual > 1e-4 && rec.points_used > 0;
    report.checks.push_back(rec);
  }

  report.checks.push_back(
      rank_check("rank-I12-I23-I123-H", {rot.i12, rot.i23, i123, h}, 4, spec));
  report.append(identity_suite(spec));

  report.append(gradient_audit(h, spec));
  report.append(gradient_audit(rot.i12, spec));
  report.append(gradient_audit(rot.i23, spec));
  report.append(gradient_audit(i123, spec));

  if (pot.kind == PotentialKind::SW) {
    const SWIntegrals swi = integrals_sw(pot, space);
    report.checks.push_back(sweep(
        "conserves-sw-integrals", "bracket", spec.tol_bracket, spec,
        [&](const PhasePoint& pt) {
          return std::max({std::fabs(poisson_bracket(swi.i01, h, pt)),
                           std::fabs(poisson_bracket(swi.i02, h, pt)),
                           std::fabs(poisson_bracket(swi.i03, h, pt))});
        }));
    report.checks.push_back(sweep(
        "sw-cross-brackets", "bracket", spec.tol_bracket, spec,
        [&](const PhasePoint& pt) {
          return std::max(
              {std::fabs(poisson_bracket(swi.i01, rot.i23, pt)),
               std::fabs(poisson_bracket(swi.i02, rot.i13, pt)),
               std::fabs(poisson_bracket(swi.i03, rot.i12, pt))});
        }));
    report.checks.push_back(rank_check("rank-I01-I12-I23-I123-H",
                                       {swi.i01, rot.i12, rot.i23, i123, h},
                                       5, spec));
    report.checks.push_back(rank_check(
        "rank-seven-bound",
        {swi.i01, swi.i02, swi.i03, rot.i12, rot.i23, i123, h}, 5, spec,
        /*is_upper_bound=*/true));
    report.append(gradient_audit(swi.i01, spec));
    report.append(gradient_audit(swi.i02, spec));
    report.append(gradient_audit(swi.i03, spec));
  }

  const int gi = pot.gkc_index();
  if (gi != 0) {
    const Observable li = integral_L(gi, pot, space);
    report.checks.push_back(sweep(
        "conserves-L" + std::to_string(gi), "bracket", spec.tol_bracket, spec,
        [&](const PhasePoint& pt) {
          return std::fabs(poisson_bracket(li, h, pt));
        }));
    report.checks.push_back(
        rank_check("rank-L" + std::to_string(gi) + "-I12-I23-I123-H",
                   {li, rot.i12, rot.i23, i123, h}, 5, spec));
    report.append(gradient_audit(li, spec));

    // With a second beta_j = 0 the companion L_j is conserved as well.
    const double betas[3] = {pot.beta1, pot.beta2, pot.beta3};
    for (int j = 1; j <= 3; ++j) {
      if (j == gi || betas[j - 1] != 0.0) continue;
      const Observable lj = integral_L(j, pot, space);
      report.checks.push_back(sweep(
          "conserves-L" + std::to_string(j) + "-companion", "bracket",
          spec.tol_bracket, spec, [&](const PhasePoint& pt) {
            return std::fabs(poisson_bracket(lj, h, pt));
          }));
      report.checks.push_back(
          rank_check("rank-L" + std::to_string(j) + "-I12-I23-I123-H",
                     {lj, rot.i12, rot.i23, i123, h}, 5, spec));
    }
  }

  if (pot.kind == PotentialKind::KC) {
    const std::array<Observable, 3> lrl = lrl_vector(pot.k, space);
    report.checks.push_back(sweep(
        "conserves-lrl", "bracket", spec.tol_bracket, spec,
        [&](const PhasePoint& pt) {
          return std::max({std::fabs(poisson_bracket(lrl[0], h, pt)),
                           std::fabs(poisson_bracket(lrl[1], h, pt)),
                           std::fabs(poisson_bracket(lrl[2], h, pt))});
        }));
    for (int i = 0; i < 3; ++i) {
      report.checks.push_back(
          rank_check("rank-L" + std::to_string(i + 1) + "-I12-I23-I123-H",
                     {lrl[i], rot.i12, rot.i23, i123, h}, 5, spec));
      report.append(gradient_audit(lrl[i], spec));
    }
  }

  return report;
}

}  // namespace ckspace
