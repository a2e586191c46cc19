#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "ckspace/geometry.hpp"

// Canonical phase space over the geodesic polar chart, scalar observables
// with analytic gradients, the Poisson bracket, the phase-space realization
// of the so_{k1,k2}(4) generators, the kinetic energy, and the momenta maps
// between the polar and ambient charts.

namespace ckspace {

struct PhasePoint {
  PolarPoint q;
  double p_r;
  double p_theta;
  double p_phi;
};

// Gradient with respect to (r, theta, phi, p_r, p_theta, p_phi).
using Grad6 = std::array<double, 6>;

// A named scalar function on phase space carrying its analytic gradient.
// Immutable; composition uses sum/product rules so gradients of built-up
// integrals stay exact.
class Observable {
 public:
  using Eval = std::function<double(const PhasePoint&)>;
  using GradFn = std::function<Grad6(const PhasePoint&)>;

  Observable() = default;
  Observable(std::string name, CKParams params, Eval eval, GradFn grad);

  double value(const PhasePoint& pt) const;
  double operator()(const PhasePoint& pt) const { return value(pt); }
  Grad6 gradient(const PhasePoint& pt) const;

  const std::string& name() const;
  const CKParams& params() const;
  Observable renamed(std::string name) const;

  friend Observable operator+(const Observable& a, const Observable& b);
  friend Observable operator-(const Observable& a, const Observable& b);
  friend Observable operator*(const Observable& a, const Observable& b);
  friend Observable operator*(double c, const Observable& a);
  friend Observable operator+(const Observable& a, double c);

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

Observable squared(const Observable& a);

// Canonical bracket {f, g} = sum_i (df/dq_i dg/dp_i - dg/dq_i df/dp_i)
// from the analytic gradients.
double poisson_bracket(const Observable& f, const Observable& g,
                       const PhasePoint& pt);

// Phase-space realization of J_{mu nu} in polar coordinates and momenta,
// e.g. J01 = C_{k2}(th) p_r - (S_{k2}(th)/T_{k1}(r)) p_theta, J23 = p_phi.
Observable generator(Gen idx, const CKParams& params);

// T = (p_r^2 + p_theta^2/(k2 S^2_{k1}(r))
//        + p_phi^2/(k2 S^2_{k1}(r) S^2_{k2}(th))) / 2.
Observable kinetic_energy(const CKParams& params);

// Legendre map: p_r = rdot, p_theta = k2 S^2_{k1}(r) thdot,
// p_phi = k2 S^2_{k1}(r) S^2_{k2}(th) phidot.
std::array<double, 3> momenta_from_velocities(const PolarPoint& q,
                                              const std::array<double, 3>& qdot,
                                              const CKParams& params);

struct AmbientMomenta {
  double p0;
  double p1;
  double p2;
  double p3;
};

// Momenta conjugate to the Weierstrass coordinates, written in the polar
// phase space. Throws PoleError where S_{k1}(r) S_{k2}(theta) vanishes.
AmbientMomenta ambient_momenta(const PhasePoint& pt, const CKParams& params);

// Deterministic sampler for regular phase points: r in [0.2, 1.4],
// theta, phi in [0.2, 1.3], momenta in [-2, 2]^3. Each index is an
// independent stream, so sweeps stay reproducible under any evaluation
// order.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : seed_(seed) {}
  PhasePoint at(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
};

}  // namespace ckspace
