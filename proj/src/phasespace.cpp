#include "ckspace/phasespace.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace ckspace {

struct Observable::Impl {
  std::string name;
  CKParams params;
  Eval eval;
  GradFn grad;
};

Observable::Observable(std::string name, CKParams params, Eval eval,
                       GradFn grad)
    : impl_(std::make_shared<const Impl>(
          Impl{std::move(name), params, std::move(eval), std::move(grad)})) {}

double Observable::value(const PhasePoint& pt) const { return impl_->eval(pt); }

Grad6 Observable::gradient(const PhasePoint& pt) const {
  return impl_->grad(pt);
}

const std::string& Observable::name() const { return impl_->name; }

const CKParams& Observable::params() const { return impl_->params; }

Observable Observable::renamed(std::string name) const {
  Observable out = *this;
  auto impl = std::make_shared<Impl>(*impl_);
  impl->name = std::move(name);
  out.impl_ = std::move(impl);
  return out;
}

namespace {

void require_same_params(const Observable& a, const Observable& b) {
  if (!(a.params() == b.params()))
    throw std::invalid_argument("Observable composition: CKParams differ (" +
                                a.name() + ", " + b.name() + ")");
}

}  // namespace

Observable operator+(const Observable& a, const Observable& b) {
  require_same_params(a, b);
  return Observable(
      "(" + a.name() + "+" + b.name() + ")", a.params(),
      [a, b](const PhasePoint& pt) { return a.value(pt) + b.value(pt); },
      [a, b](const PhasePoint& pt) {
        Grad6 ga = a.gradient(pt);
        const Grad6 gb = b.gradient(pt);
        for (int i = 0; i < 6; ++i) ga[i] += gb[i];
        return ga;
      });
}

Observable operator-(const Observable& a, const Observable& b) {
  require_same_params(a, b);
  return Observable(
      "(" + a.name() + "-" + b.name() + ")", a.params(),
      [a, b](const PhasePoint& pt) { return a.value(pt) - b.value(pt); },
      [a, b](const PhasePoint& pt) {
        Grad6 ga = a.gradient(pt);
        const Grad6 gb = b.gradient(pt);
        for (int i = 0; i < 6; ++i) ga[i] -= gb[i];
        return ga;
      });
}

Observable operator*(const Observable& a, const Observable& b) {
  require_same_params(a, b);
  return Observable(
      "(" + a.name() + "*" + b.name() + ")", a.params(),
      [a, b](const PhasePoint& pt) { return a.value(pt) * b.value(pt); },
      [a, b](const PhasePoint& pt) {
        const double va = a.value(pt);
        const double vb = b.value(pt);
        Grad6 ga = a.gradient(pt);
        const Grad6 gb = b.gradient(pt);
        for (int i = 0; i < 6; ++i) ga[i] = ga[i] * vb + gb[i] * va;
        return ga;
      });
}

Observable operator*(double c, const Observable& a) {
  return Observable(
      std::to_string(c) + "*" + a.name(), a.params(),
      [c, a](const PhasePoint& pt) { return c * a.value(pt); },
      [c, a](const PhasePoint& pt) {
        Grad6 g = a.gradient(pt);
        for (double& v : g) v *= c;
        return g;
      });
}

Observable operator+(const Observable& a, double c) {
  return Observable(
      "(" + a.name() + "+" + std::to_string(c) + ")", a.params(),
      [c, a](const PhasePoint& pt) { return a.value(pt) + c; },
      [a](const PhasePoint& pt) { return a.gradient(pt); });
}

Observable squared(const Observable& a) {
  return Observable(
      a.name() + "^2", a.params(),
      [a](const PhasePoint& pt) {
        const double v = a.value(pt);
        return v * v;
      },
      [a](const PhasePoint& pt) {
        const double v = a.value(pt);
        Grad6 g = a.gradient(pt);
        for (double& gi : g) gi *= 2.0 * v;
        return g;
      });
}

double poisson_bracket(const Observable& f, const Observable& g,
                       const PhasePoint& pt) {
  const Grad6 gf = f.gradient(pt);
  const Grad6 gg = g.gradient(pt);
  double sum = 0.0;
  for (int i = 0; i < 3; ++i)
    sum += gf[i] * gg[i + 3] - gg[i] * gf[i + 3];
  return sum;
}

namespace {

// Per-point trig cache shared by the generator and kinetic formulas.
struct Frame {
  double cr, sr;  // C_{k1}(r), S_{k1}(r)
  double ct, st;  // C_{k2}(th), S_{k2}(th)
  double cp, sp;  // cos(phi), sin(phi)

  Frame(const PhasePoint& pt, const CKParams& k)
      : cr(ck(k.kappa1, pt.q.r)),
        sr(sk(k.kappa1, pt.q.r)),
        ct(ck(k.kappa2, pt.q.theta)),
        st(sk(k.kappa2, pt.q.theta)),
        cp(std::cos(pt.q.phi)),
        sp(std::sin(pt.q.phi)) {}
};

void require_sr(const Frame& f) {
  if (std::fabs(f.sr) <= kPoleTol)
    throw PoleError("generator: S_{k1}(r) vanishes (T pole)");
}

void require_st(const Frame& f) {
  if (std::fabs(f.st) <= kPoleTol)
    throw PoleError("generator: S_{k2}(theta) vanishes");
}

}  // namespace

Observable generator(Gen idx, const CKParams& params) {
  const double k2 = params.kappa2;
  switch (idx) {
    case Gen::J01:
      return Observable(
          "J01", params,
          [params](const PhasePoint& pt) {
            const Frame f(pt, params);
            require_sr(f);
            return f.ct * pt.p_r - f.st * (f.cr / f.sr) * pt.p_theta;
          },
          [params, k2](const PhasePoint& pt) {
            const Frame f(pt, params);
            require_sr(f);
            const double inv_tr = f.cr / f.sr;
            return Grad6{f.st * pt.p_theta / (f.sr * f.sr),
                         -k2 * f.st * pt.p_r - f.ct * inv_tr * pt.p_theta,
                         0.0, f.ct, -f.st * inv_tr, 0.0};
          });
    case Gen::J02:
      return Observable(
          "J02", params,
          [params, k2](const PhasePoint& pt) {
            const Frame f(pt, params);
            require_sr(f);
            require_st(f);
            const double inv_tr = f.cr / f.sr;
            return k2 * f.st * f.cp * pt.p_r +
                   f.ct * f.cp * inv_tr * pt.p_theta -
                   f.sp * inv_tr / f.st * pt.p_phi;
          },
          [params, k2](const PhasePoint& pt) {
            const Frame f(pt, params);
            require_sr(f);
            require_st(f);
            const double inv_tr = f.cr / f.sr;
            const double st2 = f.st * f.st;
            return Grad6{
                -(f.ct * f.cp * pt.p_theta - f.sp / f.st * pt.p_phi) /
                    (f.sr * f.sr),
                k2 * f.ct * f.cp * pt.p_r - k2 * f.st * f.cp * inv_tr * pt.p_theta +
                    f.sp * f.ct * inv_tr / st2 * pt.p_phi,
                -k2 * f.st * f.sp * pt.p_r - f.ct * f.sp * inv_tr * pt.p_theta -
                    f.cp * inv_tr / f.st * pt.p_phi,
                k2 * f.st * f.cp, f.ct * f.cp * inv_tr, -f.sp * inv_tr / f.st};
          });
    case Gen::J03:
      return Observable(
          "J03", params,
          [params, k2](const PhasePoint& pt) {
            const Frame f(pt, params);
            require_sr(f);
            require_st(f);
            const double inv_tr = f.cr / f.sr;
            return k2 * f.st * f.sp * pt.p_r +
                   f.ct * f.sp * inv_tr * pt.p_theta +
                   f.cp * inv_tr / f.st * pt.p_phi;
          },
          [params, k2](const PhasePoint& pt) {
            const Frame f(pt, params);
            require_sr(f);
            require_st(f);
            const double inv_tr = f.cr / f.sr;
            const double st2 = f.st * f.st;
            return Grad6{
                -(f.ct * f.sp * pt.p_theta + f.cp / f.st * pt.p_phi) /
                    (f.sr * f.sr),
                k2 * f.ct * f.sp * pt.p_r - k2 * f.st * f.sp * inv_tr * pt.p_theta -
                    f.cp * f.ct * inv_tr / st2 * pt.p_phi,
                k2 * f.st * f.cp * pt.p_r + f.ct * f.cp * inv_tr * pt.p_theta -
                    f.sp * inv_tr / f.st * pt.p_phi,
                k2 * f.st * f.sp, f.ct * f.sp * inv_tr, f.cp * inv_tr / f.st};
          });
    case Gen::J12:
      return Observable(
          "J12", params,
          [params](const PhasePoint& pt) {
            const Frame f(pt, params);
            require_st(f);
            return f.cp * pt.p_theta - f.sp * (f.ct / f.st) * pt.p_phi;
          },
          [params](const PhasePoint& pt) {
            const Frame f(pt, params);
            require_st(f);
            const double inv_tt = f.ct / f.st;
            return Grad6{0.0, f.sp * pt.p_phi / (f.st * f.st),
                         -f.sp * pt.p_theta - f.cp * inv_tt * pt.p_phi, 0.0,
                         f.cp, -f.sp * inv_tt};
          });
    case Gen::J13:
      return Observable(
          "J13", params,
          [params](const PhasePoint& pt) {
            const Frame f(pt, params);
            require_st(f);
            return f.sp * pt.p_theta + f.cp * (f.ct / f.st) * pt.p_phi;
          },
          [params](const PhasePoint& pt) {
            const Frame f(pt, params);
            require_st(f);
            const double inv_tt = f.ct / f.st;
            return Grad6{0.0, -f.cp * pt.p_phi / (f.st * f.st),
                         f.cp * pt.p_theta - f.sp * inv_tt * pt.p_phi, 0.0,
                         f.sp, f.cp * inv_tt};
          });
    case Gen::J23:
      return Observable(
          "J23", params,
          [](const PhasePoint& pt) { return pt.p_phi; },
          [](const PhasePoint&) {
            return Grad6{0.0, 0.0, 0.0, 0.0, 0.0, 1.0};
          });
  }
  throw std::invalid_argument("generator: bad index");
}

Observable kinetic_energy(const CKParams& params) {
  const double k2 = params.kappa2;
  return Observable(
      "T", params,
      [params, k2](const PhasePoint& pt) {
        const Frame f(pt, params);
        if (std::fabs(f.sr) <= kDegenerateTol ||
            std::fabs(f.st) <= kDegenerateTol)
          throw DegenerateMetric("kinetic_energy: chart singular");
        const double sr2 = f.sr * f.sr;
        const double st2 = f.st * f.st;
        return 0.5 * (pt.p_r * pt.p_r + pt.p_theta * pt.p_theta / (k2 * sr2) +
                      pt.p_phi * pt.p_phi / (k2 * sr2 * st2));
      },
      [params, k2](const PhasePoint& pt) {
        const Frame f(pt, params);
        if (std::fabs(f.sr) <= kDegenerateTol ||
            std::fabs(f.st) <= kDegenerateTol)
          throw DegenerateMetric("kinetic_energy: chart singular");
        const double sr2 = f.sr * f.sr;
        const double st2 = f.st * f.st;
        return Grad6{-f.cr / (k2 * sr2 * f.sr) *
                         (pt.p_theta * pt.p_theta +
                          pt.p_phi * pt.p_phi / st2),
                     -f.ct * pt.p_phi * pt.p_phi / (k2 * sr2 * st2 * f.st),
                     0.0,
                     pt.p_r,
                     pt.p_theta / (k2 * sr2),
                     pt.p_phi / (k2 * sr2 * st2)};
      });
}

std::array<double, 3> momenta_from_velocities(const PolarPoint& q,
                                              const std::array<double, 3>& qdot,
                                              const CKParams& params) {
  const double sr = sk(params.kappa1, q.r);
  const double st = sk(params.kappa2, q.theta);
  const double a = params.kappa2 * sr * sr;
  return {qdot[0], a * qdot[1], a * st * st * qdot[2]};
}

AmbientMomenta ambient_momenta(const PhasePoint& pt, const CKParams& params) {
  const Frame f(pt, params);
  // The 1/S_{k1}(r) and 1/S_{k2}(theta) factors only multiply p_theta and
  // p_phi, so a vanishing momentum keeps the fiber point regular.
  if (pt.p_theta != 0.0 || pt.p_phi != 0.0) {
    if (std::fabs(f.sr) <= kPoleTol)
      throw PoleError("ambient_momenta: S_{k1}(r) vanishes");
    if (pt.p_phi != 0.0 && std::fabs(f.st) <= kPoleTol)
      throw PoleError("ambient_momenta: S_{k2}(theta) vanishes");
  }
  const double k2 = params.kappa2;
  const double a = pt.p_theta == 0.0 ? 0.0 : pt.p_theta / f.sr;
  const double b = pt.p_phi == 0.0 ? 0.0 : pt.p_phi / (f.sr * f.st);
  const double p0 = -f.sr * pt.p_r;
  const double p1 = f.cr * f.ct * pt.p_r - f.st * a;
  const double p2 = k2 * f.cr * f.st * f.cp * pt.p_r + f.ct * f.cp * a -
                    f.sp * b;
  const double p3 = k2 * f.cr * f.st * f.sp * pt.p_r + f.ct * f.sp * a +
                    f.cp * b;
  return AmbientMomenta{p0, p1, p2, p3};
}

namespace {

// splitmix64 step; decorrelates per-point streams from a single seed.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double unit_double(std::uint64_t& state) {
  state = mix64(state);
  return static_cast<double>(state >> 11) * 0x1.0p-53;
}

}  // namespace

PhasePoint PointSampler::at(std::uint64_t index) const {
  std::uint64_t state = mix64(seed_ ^ mix64(index + 1));
  auto uniform = [&state](double lo, double hi) {
    return lo + (hi - lo) * unit_double(state);
  };
  PhasePoint pt;
  pt.q.r = uniform(0.2, 1.4);
  pt.q.theta = uniform(0.2, 1.3);
  pt.q.phi = uniform(0.2, 1.3);
  pt.p_r = uniform(-2.0, 2.0);
  pt.p_theta = uniform(-2.0, 2.0);
  pt.p_phi = uniform(-2.0, 2.0);
  return pt;
}

}  // namespace ckspace
