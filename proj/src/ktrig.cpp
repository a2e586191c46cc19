#include "ckspace/ktrig.hpp"

#include <cmath>

namespace ckspace {

namespace {

// Series in u = kappa * x^2, valid (and exact to double precision) for
// |u| < kSeriesThreshold. Seven terms leave a truncation error of order
// u^7 / 15! ~ 1e-68.
double ck_series(double u) {
  return 1.0 +
         u * (-1.0 / 2 +
              u * (1.0 / 24 +
                   u * (-1.0 / 720 +
                        u * (1.0 / 40320 +
                             u * (-1.0 / 3628800 + u * (1.0 / 479001600))))));
}

double sk_series_over_x(double u) {
  return 1.0 +
         u * (-1.0 / 6 +
              u * (1.0 / 120 +
                   u * (-1.0 / 5040 +
                        u * (1.0 / 362880 +
                             u * (-1.0 / 39916800 + u * (1.0 / 6227020800))))));
}

}  // namespace

double ck(Kappa kappa, double x) {
  const double k = kappa.value;
  const double u = k * x * x;
  if (std::fabs(u) < kSeriesThreshold) return ck_series(u);
  if (k > 0.0) return std::cos(std::sqrt(k) * x);
  return std::cosh(std::sqrt(-k) * x);
}

double sk(Kappa kappa, double x) {
  const double k = kappa.value;
  const double u = k * x * x;
  if (std::fabs(u) < kSeriesThreshold) return x * sk_series_over_x(u);
  if (k > 0.0) {
    const double s = std::sqrt(k);
    return std::sin(s * x) / s;
  }
  const double s = std::sqrt(-k);
  return std::sinh(s * x) / s;
}

double tk(Kappa kappa, double x, double pole_tol) {
  const double c = ck(kappa, x);
  if (std::fabs(c) <= pole_tol)
    throw PoleError("tk: C_kappa(x) vanishes (kappa=" +
                    std::to_string(kappa.value) + ", x=" + std::to_string(x) +
                    ")");
  return sk(kappa, x) / c;
}

double dck(Kappa kappa, double x) { return -kappa.value * sk(kappa, x); }

double dsk(Kappa kappa, double x) { return ck(kappa, x); }

}  // namespace ckspace
