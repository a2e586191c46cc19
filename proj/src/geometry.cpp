#include "ckspace/geometry.hpp"

#include <cmath>
#include <cstring>

namespace ckspace {

AmbientPoint polar_to_ambient(const PolarPoint& q, const CKParams& params) {
  const double k1 = params.kappa1;
  const double k2 = params.kappa2;
  const double sr = sk(k1, q.r);
  const double st = sk(k2, q.theta);
  return AmbientPoint{ck(k1, q.r), sr * ck(k2, q.theta),
                      sr * st * std::cos(q.phi), sr * st * std::sin(q.phi)};
}

double sigma_residual(const AmbientPoint& X, const CKParams& params) {
  const double k1 = params.kappa1;
  const double k2 = params.kappa2;
  return X.x0 * X.x0 + k1 * X.x1 * X.x1 + k1 * k2 * (X.x2 * X.x2 + X.x3 * X.x3) -
         1.0;
}

PolarPoint ambient_to_polar(const AmbientPoint& X, const CKParams& params) {
  const double k1 = params.kappa1;
  const double k2 = params.kappa2;

  if (std::fabs(sigma_residual(X, params)) > 1e-9)
    throw ChartError("ambient_to_polar: point is not on the quadric Sigma");

  const double rho2 = X.x2 * X.x2 + X.x3 * X.x3;
  const double sr2 = X.x1 * X.x1 + k2 * rho2;  // S_{k1}(r)^2
  if (sr2 < 0.0)
    throw ChartError(
        "ambient_to_polar: outside the time-like region (x2^2 + x3^2 > x1^2)");
  const double sr = std::sqrt(sr2);

  double r;
  if (k1 > 0.0) {
    const double s = std::sqrt(k1);
    r = std::atan2(s * sr, X.x0) / s;
  } else if (k1 < 0.0) {
    const double s = std::sqrt(-k1);
    r = std::asinh(s * sr) / s;
  } else {
    r = sr;
  }

  if (sr <= kDegenerateTol) return PolarPoint{r, 0.0, 0.0};  // fiber point

  const double ct = X.x1 / sr;
  const double st = std::sqrt(rho2) / sr;
  double theta;
  if (k2 > 0.0) {
    const double s = std::sqrt(k2);
    theta = std::atan2(s * st, ct) / s;
  } else {
    const double s = std::sqrt(-k2);
    theta = std::asinh(s * st) / s;
  }

  const double phi =
      (rho2 <= kDegenerateTol * kDegenerateTol) ? 0.0 : std::atan2(X.x3, X.x2);
  return PolarPoint{r, theta, phi};
}

std::array<double, 3> metric_polar(const PolarPoint& q, const CKParams& params) {
  const double sr = sk(params.kappa1, q.r);
  const double st = sk(params.kappa2, q.theta);
  if (std::fabs(sr) <= kDegenerateTol || std::fabs(st) <= kDegenerateTol)
    throw DegenerateMetric("metric_polar: chart singular (S_{k1}(r) or "
                           "S_{k2}(theta) vanishes)");
  const double g_tt = params.kappa2 * sr * sr;
  return {1.0, g_tt, g_tt * st * st};
}

double ambient_quadratic_form(const std::array<double, 4>& u,
                              const std::array<double, 4>& v,
                              const CKParams& params) {
  const double k1 = params.kappa1;
  const double k2 = params.kappa2;
  double q = u[1] * v[1] + k2 * (u[2] * v[2] + u[3] * v[3]);
  if (k1 != 0.0) q += u[0] * v[0] / k1;
  return q;
}

Christoffel christoffel(const PolarPoint& q, const CKParams& params) {
  const double k1 = params.kappa1;
  const double k2 = params.kappa2;
  const double sr = sk(k1, q.r);
  const double cr = ck(k1, q.r);
  const double st = sk(k2, q.theta);
  const double ct = ck(k2, q.theta);
  if (std::fabs(sr) <= kDegenerateTol || std::fabs(st) <= kDegenerateTol)
    throw DegenerateMetric("christoffel: metric degenerate at this point");

  constexpr int R = 0, Th = 1, Ph = 2;
  Christoffel g{};
  const double inv_tr = cr / sr;  // 1 / T_{k1}(r)
  const double inv_tt = ct / st;  // 1 / T_{k2}(theta)

  g[Th][Th][R] = g[Th][R][Th] = inv_tr;
  g[Ph][Ph][R] = g[Ph][R][Ph] = inv_tr;
  g[Ph][Ph][Th] = g[Ph][Th][Ph] = inv_tt;
  g[R][Th][Th] = -k2 * sr * cr;
  g[R][Ph][Ph] = -k2 * sr * cr * st * st;
  g[Th][Ph][Ph] = -st * ct;
  return g;
}

CurvatureReport riemann_ricci(const PolarPoint& q, const CKParams& params) {
  const double k1 = params.kappa1;
  const double k2 = params.kappa2;
  const double sr = sk(k1, q.r);
  const double st = sk(k2, q.theta);
  if (std::fabs(sr) <= kDegenerateTol || std::fabs(st) <= kDegenerateTol)
    throw DegenerateMetric("riemann_ricci: metric degenerate at this point");

  constexpr int R = 0, Th = 1, Ph = 2;
  CurvatureReport rep{};
  std::memset(rep.riemann, 0, sizeof(rep.riemann));

  const double srr = sr * sr;
  const double stt = st * st;

  // Nonzero components R^i_{jij} = -R^i_{jji}.
  auto set = [&](int i, int j, double value) {
    rep.riemann[i][j][i][j] = value;
    rep.riemann[i][j][j][i] = -value;
  };
  set(R, Th, k1 * k2 * srr);
  set(Ph, Th, k1 * k2 * srr);
  set(R, Ph, k1 * k2 * srr * stt);
  set(Th, Ph, k1 * k2 * srr * stt);
  set(Th, R, k1);
  set(Ph, R, k1);

  rep.ricci = {2.0 * k1, 2.0 * k1 * k2 * srr, 2.0 * k1 * k2 * srr * stt};
  rep.sectional = {k1, k1, k1};
  rep.scalar = 6.0 * k1;
  return rep;
}

double inverse_sk(Kappa kappa, double target) {
  const double k = kappa.value;
  if (k == 0.0) return target;
  if (k > 0.0) {
    const double s = std::sqrt(k);
    double arg = s * target;
    if (std::fabs(arg) > 1.0) {
      if (std::fabs(arg) > 1.0 + 1e-12)
        throw BranchError("inverse_sk: |target| exceeds 1/sqrt(kappa)");
      arg = std::copysign(1.0, arg);
    }
    return std::asin(arg) / s;
  }
  const double s = std::sqrt(-k);
  return std::asinh(s * target) / s;
}

DistanceTriple distances(const PolarPoint& q, const CKParams& params) {
  const AmbientPoint X = polar_to_ambient(q, params);
  const double k1 = params.kappa1;
  const double k12 = params.kappa1 * params.kappa2;
  return DistanceTriple{inverse_sk(k1, X.x1), inverse_sk(k12, X.x2),
                        inverse_sk(k12, X.x3)};
}

double foot_point_distance(const PolarPoint& q, const CKParams& params) {
  const double target = sk(params.kappa1, q.r) * sk(params.kappa2, q.theta);
  return inverse_sk(params.kappa1 * params.kappa2, target);
}

}  // namespace ckspace
