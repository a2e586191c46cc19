#include <cmath>

#include <doctest.h>

#include "ckspace/geometry.hpp"
#include "ckspace/phasespace.hpp"
#include "support/oracles.hpp"

using namespace ckspace;

namespace {

// FD Christoffels straight from the diagonal metric,
// Gamma^k_ij = g^kk (d_i g_jk + d_j g_ik - d_k g_ij) / 2.
Christoffel fd_christoffel(const PolarPoint& q, const CKParams& p,
                           double h = 1e-5) {
  auto shifted = [](const PolarPoint& pt, int i, double d) {
    PolarPoint out = pt;
    double* f[3] = {&out.r, &out.theta, &out.phi};
    *f[i] += d;
    return out;
  };
  const std::array<double, 3> g = metric_polar(q, p);
  double dg[3][3];
  for (int l = 0; l < 3; ++l) {
    const auto gp = metric_polar(shifted(q, l, h), p);
    const auto gm = metric_polar(shifted(q, l, -h), p);
    for (int m = 0; m < 3; ++m) dg[l][m] = (gp[m] - gm[m]) / (2.0 * h);
  }
  Christoffel out{};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double di = (j == k) ? dg[i][k] : 0.0;
        const double dj = (i == k) ? dg[j][k] : 0.0;
        const double dk = (i == j) ? dg[k][i] : 0.0;
        out[k][i][j] = 0.5 / g[k] * (di + dj - dk);
      }
  return out;
}

}  // namespace

TEST_CASE("polar_to_ambient: fixed values") {
  for (const auto& [name, p] : canonical_spaces()) {
    CAPTURE(name);
    const AmbientPoint origin = polar_to_ambient({0.0, 0.9, 0.4}, p);
    CHECK(origin.x0 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::fabs(origin.x1) <= 1e-15);
    CHECK(std::fabs(origin.x2) <= 1e-15);
    CHECK(std::fabs(origin.x3) <= 1e-15);
  }
  const AmbientPoint x =
      polar_to_ambient({M_PI / 2, M_PI / 2, 0.0}, CKParams::sphere());
  CHECK(std::fabs(x.x0) <= 1e-15);
  CHECK(std::fabs(x.x1) <= 1e-15);
  CHECK(x.x2 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::fabs(x.x3) <= 1e-15);
}

TEST_CASE("polar_to_ambient equals the group action on the origin") {
  const PointSampler sampler(11);
  for (const auto& [name, p] : canonical_spaces()) {
    CAPTURE(name);
    for (int i = 0; i < 20; ++i) {
      const PolarPoint q = sampler.at(i).q;
      const Eigen::Vector4d o(1.0, 0.0, 0.0, 0.0);
      const Eigen::Vector4d v = one_param_subgroup(Gen::J23, q.phi, p) *
                                one_param_subgroup(Gen::J12, q.theta, p) *
                                one_param_subgroup(Gen::J01, q.r, p) * o;
      const AmbientPoint X = polar_to_ambient(q, p);
      CHECK(std::fabs(v(0) - X.x0) <= 1e-12);
      CHECK(std::fabs(v(1) - X.x1) <= 1e-12);
      CHECK(std::fabs(v(2) - X.x2) <= 1e-12);
      CHECK(std::fabs(v(3) - X.x3) <= 1e-12);
    }
  }
}

TEST_CASE("sigma residual") {
  CHECK(sigma_residual({1.0, 0.0, 0.0, 0.0}, CKParams::sphere()) == 0.0);
  // Flat case: Sigma degenerates to x0^2 = 1.
  CHECK(sigma_residual({1.0, 3.0, -2.0, 0.7}, CKParams::euclidean()) == 0.0);
  const PointSampler sampler(3);
  for (const auto& [name, p] : canonical_spaces()) {
    CAPTURE(name);
    for (int i = 0; i < 50; ++i) {
      const AmbientPoint X = polar_to_ambient(sampler.at(i).q, p);
      CHECK(std::fabs(sigma_residual(X, p)) <= 1e-12);
    }
  }
}

TEST_CASE("chart round trip on all six spaces") {
  const PointSampler sampler(17);
  for (const auto& [name, p] : canonical_spaces()) {
    CAPTURE(name);
    for (int i = 0; i < 1000; ++i) {
      const PolarPoint q = sampler.at(i).q;
      const PolarPoint back = ambient_to_polar(polar_to_ambient(q, p), p);
      CHECK(std::fabs(back.r - q.r) <= 1e-9);
      CHECK(std::fabs(back.theta - q.theta) <= 1e-9);
      CHECK(std::fabs(back.phi - q.phi) <= 1e-9);
    }
  }
}

TEST_CASE("chart round trip on deformed parameter pairs") {
  // Non-unit kappas exercise the scaled inverse branches.
  const PointSampler sampler(19);
  for (const CKParams p : {CKParams(0.25, 2.0), CKParams(2.5, 0.5),
                           CKParams(-0.5, -2.0), CKParams(1.7, -0.3)}) {
    CAPTURE(p.kappa1);
    CAPTURE(p.kappa2);
    for (int i = 0; i < 200; ++i) {
      const PolarPoint q = sampler.at(i).q;
      const AmbientPoint X = polar_to_ambient(q, p);
      CHECK(std::fabs(sigma_residual(X, p)) <= 1e-12);
      const PolarPoint back = ambient_to_polar(X, p);
      CHECK(std::fabs(back.r - q.r) <= 1e-9);
      CHECK(std::fabs(back.theta - q.theta) <= 1e-9);
      CHECK(std::fabs(back.phi - q.phi) <= 1e-9);
    }
  }
}

TEST_CASE("ambient_to_polar edge cases") {
  SUBCASE("origin returns the r=0 convention") {
    const PolarPoint q = ambient_to_polar({1.0, 0.0, 0.0, 0.0},
                                          CKParams::hyperbolic());
    CHECK(q.r == 0.0);
    CHECK(q.theta == 0.0);
    CHECK(q.phi == 0.0);
  }
  SUBCASE("space-like points are rejected when kappa2 < 0") {
    // kappa2 = -1: x2^2 + x3^2 > x1^2 with x0 adjusted onto Sigma.
    const CKParams p = CKParams::anti_de_sitter();
    const double x1 = 0.1, x2 = 0.8, x3 = 0.3;
    const double x0 =
        std::sqrt(1.0 - p.kappa1 * x1 * x1 + (x2 * x2 + x3 * x3));
    CHECK_THROWS_AS(ambient_to_polar({x0, x1, x2, x3}, p), ChartError);
  }
  SUBCASE("points off the quadric are rejected") {
    CHECK_THROWS_AS(ambient_to_polar({2.0, 0.0, 0.0, 0.0}, CKParams::sphere()),
                    ChartError);
  }
}

TEST_CASE("metric examples") {
  SUBCASE("flat spherical coordinates") {
    const auto g = metric_polar({2.0, 0.7, 0.0}, CKParams::euclidean());
    CHECK(g[0] == 1.0);
    CHECK(g[1] == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(g[2] == doctest::Approx(4.0 * std::sin(0.7) * std::sin(0.7))
                      .epsilon(1e-14));
  }
  SUBCASE("AdS row of the metric table") {
    const double r = 0.8, th = 0.5;
    const auto g = metric_polar({r, th, 0.3}, CKParams::anti_de_sitter());
    CHECK(g[1] ==
          doctest::Approx(-std::sin(r) * std::sin(r)).epsilon(1e-14));
    CHECK(g[2] == doctest::Approx(-std::sin(r) * std::sin(r) *
                                  std::sinh(th) * std::sinh(th))
                      .epsilon(1e-14));
  }
  SUBCASE("degenerate at the chart origin") {
    CHECK_THROWS_AS(metric_polar({0.0, 0.7, 0.1}, CKParams::sphere()),
                    DegenerateMetric);
    CHECK_THROWS_AS(metric_polar({0.5, 0.0, 0.1}, CKParams::sphere()),
                    DegenerateMetric);
  }
}

TEST_CASE("metric pullback from the ambient quadratic form") {
  const PointSampler sampler(23);
  constexpr double h = 1e-6;
  for (const auto& [name, p] : canonical_spaces()) {
    CAPTURE(name);
    for (int n = 0; n < 15; ++n) {
      const PolarPoint q = sampler.at(n).q;
      // FD Jacobian of the chart map.
      std::array<std::array<double, 4>, 3> jac{};
      auto shifted = [&](int i, double d) {
        PolarPoint out = q;
        double* f[3] = {&out.r, &out.theta, &out.phi};
        *f[i] += d;
        return polar_to_ambient(out, p);
      };
      for (int i = 0; i < 3; ++i) {
        const AmbientPoint xp = shifted(i, h);
        const AmbientPoint xm = shifted(i, -h);
        jac[i] = {(xp.x0 - xm.x0) / (2 * h), (xp.x1 - xm.x1) / (2 * h),
                  (xp.x2 - xm.x2) / (2 * h), (xp.x3 - xm.x3) / (2 * h)};
      }
      const std::array<double, 3> g = metric_polar(q, p);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const double expected = (i == j) ? g[i] : 0.0;
          CHECK(std::fabs(ambient_quadratic_form(jac[i], jac[j], p) -
                          expected) <= 1e-9);
        }
    }
  }
}

TEST_CASE("christoffel symbols") {
  SUBCASE("named components") {
    const CKParams p = CKParams::sphere();
    const PolarPoint q{0.9, 0.6, 1.1};
    const Christoffel g = christoffel(q, p);
    CHECK(g[2][2][1] ==
          doctest::Approx(1.0 / std::tan(0.6)).epsilon(1e-14));
    CHECK(g[1][1][0] == doctest::Approx(1.0 / std::tan(0.9)).epsilon(1e-14));
    CHECK(g[0][1][1] ==
          doctest::Approx(-std::sin(0.9) * std::cos(0.9)).epsilon(1e-14));
  }
  SUBCASE("flat: Gamma^theta_theta-r = 1/r") {
    const Christoffel g = christoffel({2.5, 0.8, 0.3}, CKParams::euclidean());
    CHECK(g[1][1][0] == doctest::Approx(1.0 / 2.5).epsilon(1e-14));
  }
  SUBCASE("matches the FD oracle on all six spaces") {
    const PointSampler sampler(31);
    for (const auto& [name, p] : canonical_spaces()) {
      CAPTURE(name);
      for (int n = 0; n < 10; ++n) {
        const PolarPoint q = sampler.at(n).q;
        const Christoffel a = christoffel(q, p);
        const Christoffel fd = fd_christoffel(q, p);
        for (int k = 0; k < 3; ++k)
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
              CHECK(std::fabs(a[k][i][j] - fd[k][i][j]) <= 1e-6);
      }
    }
  }
}

TEST_CASE("riemann/ricci/sectional/scalar") {
  SUBCASE("K = -6 on H3, zero tensor on E3, R_theta_theta value") {
    const CurvatureReport h3 =
        riemann_ricci({0.8, 0.7, 0.2}, CKParams::hyperbolic());
    CHECK(h3.scalar == doctest::Approx(-6.0).epsilon(1e-15));

    const CurvatureReport e3 =
        riemann_ricci({0.8, 0.7, 0.2}, CKParams::euclidean());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          for (int l = 0; l < 3; ++l)
            CHECK(e3.riemann[i][j][k][l] == 0.0);

    const double r = 0.9, th = 0.5;
    const CurvatureReport ds =
        riemann_ricci({r, th, 1.0}, CKParams::de_sitter());
    const double sr = std::sinh(r);
    CHECK(ds.ricci[1] == doctest::Approx(2.0 * (-1.0) * (-1.0) * sr * sr)
                             .epsilon(1e-14));
  }
  SUBCASE("riemann from FD christoffel derivatives") {
    constexpr double h = 1e-5;
    const PointSampler sampler(37);
    for (const auto& [name, p] : canonical_spaces()) {
      CAPTURE(name);
      for (int n = 0; n < 6; ++n) {
        const PolarPoint q = sampler.at(n).q;
        auto shifted = [&](int i, double d) {
          PolarPoint out = q;
          double* f[3] = {&out.r, &out.theta, &out.phi};
          *f[i] += d;
          return out;
        };
        const Christoffel gamma = christoffel(q, p);
        Christoffel dgamma[3];
        for (int l = 0; l < 3; ++l) {
          const Christoffel gp = christoffel(shifted(l, h), p);
          const Christoffel gm = christoffel(shifted(l, -h), p);
          for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
              for (int c = 0; c < 3; ++c)
                dgamma[l][a][b][c] = (gp[a][b][c] - gm[a][b][c]) / (2 * h);
        }
        const CurvatureReport rep = riemann_ricci(q, p);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
              for (int l = 0; l < 3; ++l) {
                double fd = dgamma[k][i][l][j] - dgamma[l][i][k][j];
                for (int m = 0; m < 3; ++m)
                  fd += gamma[i][k][m] * gamma[m][l][j] -
                        gamma[i][l][m] * gamma[m][k][j];
                CHECK(std::fabs(fd - rep.riemann[i][j][k][l]) <= 1e-6);
              }
        for (double s : rep.sectional)
          CHECK(std::fabs(s - p.kappa1) <= 1e-9);
        CHECK(std::fabs(rep.scalar - 6.0 * p.kappa1) <= 1e-9);
      }
    }
  }
}

TEST_CASE("distances") {
  SUBCASE("flat distances are the Cartesian coordinates") {
    const CKParams p = CKParams::euclidean();
    const PolarPoint q{1.2, 0.7, 0.4};
    const DistanceTriple d = distances(q, p);
    const AmbientPoint X = polar_to_ambient(q, p);
    CHECK(d.x == doctest::Approx(X.x1).epsilon(1e-15));
    CHECK(d.y == doctest::Approx(X.x2).epsilon(1e-15));
    CHECK(d.z == doctest::Approx(X.x3).epsilon(1e-15));
  }
  SUBCASE("theta = pi/2, phi = 0 on the sphere") {
    const CKParams p = CKParams::sphere();
    const PolarPoint q{0.8, M_PI / 2, 0.0};
    const DistanceTriple d = distances(q, p);
    CHECK(std::fabs(d.x) <= 1e-15);  // x1 = S(r) cos(theta) = 0
    CHECK(std::sin(d.y) == doctest::Approx(std::sin(0.8)).epsilon(1e-14));
    CHECK(std::fabs(d.z) <= 1e-15);
  }
  SUBCASE("r_i + distance = pi/2 on S3") {
    const CKParams p = CKParams::sphere();
    const PointSampler sampler(41);
    for (int n = 0; n < 25; ++n) {
      const PolarPoint q = sampler.at(n).q;
      const DistanceTriple d = distances(q, p);
      const AmbientPoint X = polar_to_ambient(q, p);
      // cos(r_i) = x_i with r_i the distance to the antipodal center O_i.
      CHECK(std::cos(M_PI / 2 - d.x) == doctest::Approx(X.x1).epsilon(1e-12));
      CHECK(std::cos(M_PI / 2 - d.y) == doctest::Approx(X.x2).epsilon(1e-12));
      CHECK(std::cos(M_PI / 2 - d.z) == doctest::Approx(X.x3).epsilon(1e-12));
    }
  }
  SUBCASE("branch error off the principal branch") {
    // AdS: x1 = sin(r) cosh(theta) can exceed 1.
    const CKParams p = CKParams::anti_de_sitter();
    CHECK_THROWS_AS(distances({1.4, 1.5, 0.3}, p), BranchError);
  }
  SUBCASE("foot-point distance h satisfies its triangle relation") {
    for (const auto& [name, p] : canonical_spaces()) {
      CAPTURE(name);
      const PolarPoint q{0.7, 0.6, 0.9};
      const double h = foot_point_distance(q, p);
      CHECK(sk(p.kappa1 * p.kappa2, h) ==
            doctest::Approx(sk(p.kappa1, q.r) * sk(p.kappa2, q.theta))
                .epsilon(1e-12));
    }
  }
}
