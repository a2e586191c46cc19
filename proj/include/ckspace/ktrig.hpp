#pragma once

#include <cmath>

#include "ckspace/errors.hpp"

// Curvature-labelled cosine/sine/tangent. The label kappa interpolates
// between circular (kappa > 0), parabolic (kappa = 0) and hyperbolic
// (kappa < 0) functions:
//
//   ck(kappa, x) = cos(sqrt(kappa) x) | 1 | cosh(sqrt(-kappa) x)
//   sk(kappa, x) = sin(sqrt(kappa) x)/sqrt(kappa) | x | sinh(...)/sqrt(-kappa)
//   tk = sk / ck
//
// satisfying ck^2 + kappa sk^2 = 1, d/dx ck = -kappa sk, d/dx sk = ck.
// Near kappa x^2 = 0 the closed forms lose digits in sk, so a short power
// series in u = kappa x^2 is used instead; both branches agree to machine
// precision at the threshold.

namespace ckspace {

// Curvature label; one of kappa1, kappa1*kappa2, kappa2 at call sites.
struct Kappa {
  double value;
  constexpr Kappa(double v) : value(v) {}  // NOLINT: implicit by design
};

// |C_kappa| at or below this counts as a pole of T_kappa (double-precision
// noise floor). Callers may widen it per call.
inline constexpr double kPoleTol = 1e-12;

// Switch to the series branch when |kappa * x^2| is below this.
inline constexpr double kSeriesThreshold = 1e-8;

double ck(Kappa kappa, double x);
double sk(Kappa kappa, double x);

// T_kappa(x) = S_kappa(x) / C_kappa(x); throws PoleError when
// |C_kappa(x)| <= pole_tol.
double tk(Kappa kappa, double x, double pole_tol = kPoleTol);

// Derivatives: d/dx C = -kappa S, d/dx S = C.
double dck(Kappa kappa, double x);
double dsk(Kappa kappa, double x);

}  // namespace ckspace
