#pragma once

#include <array>

#include "ckspace/liealg.hpp"

// Coordinate charts on the space of points S^3_{[k1]k2}: ambient
// (Weierstrass) coordinates on the quadric
//   Sigma: x0^2 + k1 x1^2 + k1 k2 x2^2 + k1 k2 x3^2 = 1,
// geodesic polar coordinates (r, theta, phi), the induced metric, its
// Levi-Civita connection and curvature tensors, and the geodesic distances
// (x, y, z) from a point to the three reference 2-planes.

namespace ckspace {

struct PolarPoint {
  double r;
  double theta;
  double phi;
};

struct AmbientPoint {
  double x0;
  double x1;
  double x2;
  double x3;
};

// Geodesic distances to the reference 2-planes l2l3, l1l3, l1l2:
//   S_{k1}(x) = x1,  S_{k1 k2}(y) = x2,  S_{k1 k2}(z) = x3.
struct DistanceTriple {
  double x;
  double y;
  double z;
};

// Shared degeneracy tolerance for chart/metric singularities.
inline constexpr double kDegenerateTol = 1e-12;

// x0 = C_{k1}(r), x1 = S_{k1}(r) C_{k2}(th),
// x2 = S_{k1}(r) S_{k2}(th) cos(phi), x3 = S_{k1}(r) S_{k2}(th) sin(phi).
AmbientPoint polar_to_ambient(const PolarPoint& q, const CKParams& params);

// Inverse chart on the principal branch: r in [0, pi/sqrt(k1)] for k1 > 0
// and [0, inf) otherwise; theta from the two-argument inverse of
// (x1, sqrt(x2^2+x3^2)); phi = atan2(x3, x2). Fiber points (r = 0 or the
// antipode) return theta = phi = 0. Throws ChartError off the quadric or,
// for kappa2 < 0, outside the time-like region x2^2 + x3^2 <= x1^2.
PolarPoint ambient_to_polar(const AmbientPoint& X, const CKParams& params);

// Left side of Sigma minus 1.
double sigma_residual(const AmbientPoint& X, const CKParams& params);

// Diagonal of ds^2 = dr^2 + k2 S^2_{k1}(r) (dth^2 + S^2_{k2}(th) dphi^2).
// Throws DegenerateMetric when S_{k1}(r) or S_{k2}(theta) vanishes.
std::array<double, 3> metric_polar(const PolarPoint& q, const CKParams& params);

// Ambient quadratic form of the metric evaluated on tangent vectors,
//   (1/k1) u0 v0 + u1 v1 + k2 u2 v2 + k2 u3 v3,
// with the u0 v0 term dropped in the flat limit k1 = 0 (where x0 is
// constant along the chart and the term vanishes identically).
double ambient_quadratic_form(const std::array<double, 4>& u,
                              const std::array<double, 4>& v,
                              const CKParams& params);

// Christoffel symbols Gamma^k_{ij}, indices 0 = r, 1 = theta, 2 = phi.
using Christoffel = std::array<std::array<std::array<double, 3>, 3>, 3>;
Christoffel christoffel(const PolarPoint& q, const CKParams& params);

struct CurvatureReport {
  // Riemann tensor R^i_{jkl}.
  double riemann[3][3][3][3];
  // Ricci diagonal (R_rr, R_theta_theta, R_phi_phi); off-diagonals vanish.
  std::array<double, 3> ricci;
  // Sectional curvatures of the coordinate 2-planes (r-theta, r-phi,
  // theta-phi); all equal kappa1.
  std::array<double, 3> sectional;
  // Scalar curvature K = 6 kappa1.
  double scalar;
};

CurvatureReport riemann_ricci(const PolarPoint& q, const CKParams& params);

// Principal-branch inverse of S_kappa. Throws BranchError when kappa > 0
// and |target| > 1/sqrt(kappa).
double inverse_sk(Kappa kappa, double target);

DistanceTriple distances(const PolarPoint& q, const CKParams& params);

// Distance h from the point to the l1 axis: S_{k1 k2}(h) = S_{k1}(r) S_{k2}(theta).
double foot_point_distance(const PolarPoint& q, const CKParams& params);

}  // namespace ckspace
