#include "ckspace/observables.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace ckspace {

const char* potential_kind_name(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::Family: return "family";
    case PotentialKind::SW: return "sw";
    case PotentialKind::GKC1: return "gkc1";
    case PotentialKind::GKC2: return "gkc2";
    case PotentialKind::GKC3: return "gkc3";
    case PotentialKind::KC: return "kc";
  }
  return "?";
}

PotentialSpec PotentialSpec::family(double b1, double b2, double b3,
                                    std::function<double(double)> f,
                                    std::function<double(double)> df) {
  if (static_cast<bool>(f) != static_cast<bool>(df))
    throw std::invalid_argument(
        "PotentialSpec::family: radial function and derivative must be "
        "supplied together");
  PotentialSpec s;
  s.kind = PotentialKind::Family;
  s.beta1 = b1;
  s.beta2 = b2;
  s.beta3 = b3;
  s.radial = std::move(f);
  s.radial_deriv = std::move(df);
  return s;
}

PotentialSpec PotentialSpec::sw(double b0, double b1, double b2, double b3) {
  PotentialSpec s;
  s.kind = PotentialKind::SW;
  s.beta0 = b0;
  s.beta1 = b1;
  s.beta2 = b2;
  s.beta3 = b3;
  return s;
}

PotentialSpec PotentialSpec::gkc1(double k, double b2, double b3) {
  PotentialSpec s;
  s.kind = PotentialKind::GKC1;
  s.k = k;
  s.beta2 = b2;
  s.beta3 = b3;
  return s;
}

PotentialSpec PotentialSpec::gkc2(double k, double b1, double b3) {
  PotentialSpec s;
  s.kind = PotentialKind::GKC2;
  s.k = k;
  s.beta1 = b1;
  s.beta3 = b3;
  return s;
}

PotentialSpec PotentialSpec::gkc3(double k, double b1, double b2) {
  PotentialSpec s;
  s.kind = PotentialKind::GKC3;
  s.k = k;
  s.beta1 = b1;
  s.beta2 = b2;
  return s;
}

PotentialSpec PotentialSpec::kc(double k) {
  PotentialSpec s;
  s.kind = PotentialKind::KC;
  s.k = k;
  return s;
}

int PotentialSpec::gkc_index() const {
  switch (kind) {
    case PotentialKind::GKC1: return 1;
    case PotentialKind::GKC2: return 2;
    case PotentialKind::GKC3: return 3;
    default: return 0;
  }
}

namespace {

constexpr double kBarrierTol = 1e-12;

void require_active(double denom, const char* what) {
  if (std::fabs(denom) <= kBarrierTol)
    throw SingularPotential(std::string("potential: active barrier "
                                        "denominator vanishes (") +
                            what + ")");
}

// Trig cache for a configuration point.
struct QFrame {
  double cr, sr, ct, st, cp, sp;

  QFrame(const PolarPoint& q, const CKParams& k)
      : cr(ck(k.kappa1, q.r)),
        sr(sk(k.kappa1, q.r)),
        ct(ck(k.kappa2, q.theta)),
        st(sk(k.kappa2, q.theta)),
        cp(std::cos(q.phi)),
        sp(std::sin(q.phi)) {}
};

// Value and configuration-gradient of a function of (r, theta, phi).
struct CoordEval {
  double value = 0.0;
  double dr = 0.0;
  double dth = 0.0;
  double dph = 0.0;
};

Observable coord_observable(std::string name, const CKParams& params,
                            std::function<CoordEval(const PolarPoint&)> f) {
  auto fn = std::make_shared<const std::function<CoordEval(const PolarPoint&)>>(
      std::move(f));
  return Observable(
      std::move(name), params,
      [fn](const PhasePoint& pt) { return (*fn)(pt.q).value; },
      [fn](const PhasePoint& pt) {
        const CoordEval e = (*fn)(pt.q);
        return Grad6{e.dr, e.dth, e.dph, 0.0, 0.0, 0.0};
      });
}

// Radial term F(r) and derivative for the given kind.
CoordEval radial_eval(const PotentialSpec& spec, const CKParams& params,
                      double r) {
  CoordEval out;
  switch (spec.kind) {
    case PotentialKind::Family:
      if (spec.radial) {
        out.value = spec.radial(r);
        out.dr = spec.radial_deriv(r);
      }
      return out;
    case PotentialKind::SW: {
      if (spec.beta0 == 0.0) return out;
      const double cr = ck(params.kappa1, r);
      const double sr = sk(params.kappa1, r);
      if (std::fabs(cr) <= kPoleTol)
        throw PoleError("potential: T^2_{k1}(r) pole (C_{k1}(r) = 0)");
      const double t2 = sr * sr / (cr * cr);
      out.value = spec.beta0 * t2;
      out.dr = 2.0 * spec.beta0 * sr / (cr * cr * cr);
      return out;
    }
    case PotentialKind::GKC1:
    case PotentialKind::GKC2:
    case PotentialKind::GKC3:
    case PotentialKind::KC: {
      if (spec.k == 0.0) return out;
      const double cr = ck(params.kappa1, r);
      const double sr = sk(params.kappa1, r);
      if (std::fabs(sr) <= kPoleTol)
        throw PoleError("potential: 1/T_{k1}(r) pole (S_{k1}(r) = 0)");
      out.value = -spec.k * cr / sr;
      out.dr = spec.k / (sr * sr);
      return out;
    }
  }
  return out;
}

// The barrier block of U and its gradient.
CoordEval potential_eval(const PotentialSpec& spec, const CKParams& params,
                         const PolarPoint& q) {
  const double k2 = params.kappa2;
  const double b1 = spec.beta1, b2 = spec.beta2, b3 = spec.beta3;
  CoordEval out = radial_eval(spec, params, q.r);
  if (b1 == 0.0 && b2 == 0.0 && b3 == 0.0) return out;

  const QFrame f(q, params);
  require_active(f.sr, "S_{k1}(r)");
  double w = 0.0, w_dth = 0.0, w_dph = 0.0;
  if (b1 != 0.0) {
    require_active(f.ct, "C_{k2}(theta)");
    const double ct2 = f.ct * f.ct;
    w += b1 / ct2;
    w_dth += 2.0 * k2 * b1 * f.st / (ct2 * f.ct);
  }
  if (b2 != 0.0 || b3 != 0.0) {
    require_active(f.st, "S_{k2}(theta)");
    const double st2 = f.st * f.st;
    double p = 0.0, p_dph = 0.0;
    if (b2 != 0.0) {
      require_active(f.cp, "cos(phi)");
      p += b2 / (f.cp * f.cp);
      p_dph += 2.0 * b2 * f.sp / (f.cp * f.cp * f.cp);
    }
    if (b3 != 0.0) {
      require_active(f.sp, "sin(phi)");
      p += b3 / (f.sp * f.sp);
      p_dph -= 2.0 * b3 * f.cp / (f.sp * f.sp * f.sp);
    }
    w += p / st2;
    w_dth -= 2.0 * f.ct * p / (st2 * f.st);
    w_dph += p_dph / st2;
  }
  const double sr2 = f.sr * f.sr;
  out.value += w / sr2;
  out.dr -= 2.0 * f.cr * w / (sr2 * f.sr);
  out.dth += w_dth / sr2;
  out.dph += w_dph / sr2;
  return out;
}

void require_kind(const PotentialSpec& spec, PotentialKind kind,
                  const char* fn) {
  if (spec.kind != kind)
    throw std::invalid_argument(std::string(fn) + ": spec kind must be " +
                                potential_kind_name(kind));
}

}  // namespace

Observable potential(const PotentialSpec& spec, const CKParams& params) {
  return coord_observable(
      std::string("U_") + potential_kind_name(spec.kind), params,
      [spec, params](const PolarPoint& q) {
        return potential_eval(spec, params, q);
      });
}

Observable hamiltonian(const PotentialSpec& spec, const CKParams& params) {
  return (kinetic_energy(params) + potential(spec, params))
      .renamed(std::string("H_") + potential_kind_name(spec.kind));
}

Observable family_hamiltonian(const PotentialSpec& spec,
                              const CKParams& params) {
  return hamiltonian(spec, params);
}

Observable sw_hamiltonian(const PotentialSpec& spec, const CKParams& params) {
  require_kind(spec, PotentialKind::SW, "sw_hamiltonian");
  return hamiltonian(spec, params);
}

Observable gkc_hamiltonian(int i, const PotentialSpec& spec,
                           const CKParams& params) {
  if (i < 1 || i > 3)
    throw std::invalid_argument("gkc_hamiltonian: i must be 1, 2 or 3");
  if (spec.gkc_index() != i)
    throw std::invalid_argument("gkc_hamiltonian: spec kind does not match i");
  return hamiltonian(spec, params);
}

RotationIntegrals integrals_rotation(const PotentialSpec& spec,
                                     const CKParams& params) {
  const double k2 = params.kappa2;
  const double b1 = spec.beta1, b2 = spec.beta2, b3 = spec.beta3;

  // I12 = J12^2 + 2 b1 k2^2 T^2_{k2}(th) cos^2 + 2 b2 k2 / (T^2_{k2} cos^2)
  auto a12 = coord_observable(
      "A12", params, [k2, b1, b2, params](const PolarPoint& q) {
        const QFrame f(q, params);
        CoordEval e;
        if (b1 != 0.0) {
          require_active(f.ct, "C_{k2}(theta)");
          const double t2 = f.st * f.st / (f.ct * f.ct);
          e.value += 2.0 * b1 * k2 * k2 * t2 * f.cp * f.cp;
          e.dth += 4.0 * b1 * k2 * k2 * f.st * f.cp * f.cp /
                   (f.ct * f.ct * f.ct);
          e.dph -= 4.0 * b1 * k2 * k2 * t2 * f.cp * f.sp;
        }
        if (b2 != 0.0) {
          require_active(f.st, "S_{k2}(theta)");
          require_active(f.cp, "cos(phi)");
          const double inv = f.ct * f.ct / (f.st * f.st);
          e.value += 2.0 * b2 * k2 * inv / (f.cp * f.cp);
          e.dth -= 4.0 * b2 * k2 * f.ct /
                   (f.st * f.st * f.st * f.cp * f.cp);
          e.dph += 4.0 * b2 * k2 * inv * f.sp / (f.cp * f.cp * f.cp);
        }
        return e;
      });
  auto a13 = coord_observable(
      "A13", params, [k2, b1, b3, params](const PolarPoint& q) {
        const QFrame f(q, params);
        CoordEval e;
        if (b1 != 0.0) {
          require_active(f.ct, "C_{k2}(theta)");
          const double t2 = f.st * f.st / (f.ct * f.ct);
          e.value += 2.0 * b1 * k2 * k2 * t2 * f.sp * f.sp;
          e.dth += 4.0 * b1 * k2 * k2 * f.st * f.sp * f.sp /
                   (f.ct * f.ct * f.ct);
          e.dph += 4.0 * b1 * k2 * k2 * t2 * f.sp * f.cp;
        }
        if (b3 != 0.0) {
          require_active(f.st, "S_{k2}(theta)");
          require_active(f.sp, "sin(phi)");
          const double inv = f.ct * f.ct / (f.st * f.st);
          e.value += 2.0 * b3 * k2 * inv / (f.sp * f.sp);
          e.dth -= 4.0 * b3 * k2 * f.ct /
                   (f.st * f.st * f.st * f.sp * f.sp);
          e.dph -= 4.0 * b3 * k2 * inv * f.cp / (f.sp * f.sp * f.sp);
        }
        return e;
      });
  auto a23 = coord_observable(
      "A23", params, [k2, b2, b3, params](const PolarPoint& q) {
        const QFrame f(q, params);
        CoordEval e;
        if (b2 != 0.0) {
          require_active(f.cp, "cos(phi)");
          e.value += 2.0 * b2 * k2 * f.sp * f.sp / (f.cp * f.cp);
          e.dph += 4.0 * b2 * k2 * f.sp / (f.cp * f.cp * f.cp);
        }
        if (b3 != 0.0) {
          require_active(f.sp, "sin(phi)");
          e.value += 2.0 * b3 * k2 * f.cp * f.cp / (f.sp * f.sp);
          e.dph -= 4.0 * b3 * k2 * f.cp / (f.sp * f.sp * f.sp);
        }
        return e;
      });

  RotationIntegrals out{
      (squared(generator(Gen::J12, params)) + a12).renamed("I12"),
      (squared(generator(Gen::J13, params)) + a13).renamed("I13"),
      (squared(generator(Gen::J23, params)) + a23).renamed("I23")};
  return out;
}

Observable integral_i123(const PotentialSpec& spec, const CKParams& params) {
  const double k2 = params.kappa2;
  const double b1 = spec.beta1, b2 = spec.beta2, b3 = spec.beta3;
  return Observable(
      "I123", params,
      [k2, b1, b2, b3, params](const PhasePoint& pt) {
        const QFrame f(pt.q, params);
        require_active(f.st, "S_{k2}(theta)");
        const double st2 = f.st * f.st;
        double v = pt.p_theta * pt.p_theta + pt.p_phi * pt.p_phi / st2;
        if (b1 != 0.0) {
          require_active(f.ct, "C_{k2}(theta)");
          v += 2.0 * b1 * k2 / (f.ct * f.ct);
        }
        if (b2 != 0.0) {
          require_active(f.cp, "cos(phi)");
          v += 2.0 * b2 * k2 / (st2 * f.cp * f.cp);
        }
        if (b3 != 0.0) {
          require_active(f.sp, "sin(phi)");
          v += 2.0 * b3 * k2 / (st2 * f.sp * f.sp);
        }
        return v;
      },
      [k2, b1, b2, b3, params](const PhasePoint& pt) {
        const QFrame f(pt.q, params);
        require_active(f.st, "S_{k2}(theta)");
        const double st2 = f.st * f.st;
        const double st3 = st2 * f.st;
        Grad6 g{};
        g[1] = -2.0 * f.ct * pt.p_phi * pt.p_phi / st3;
        if (b1 != 0.0) {
          require_active(f.ct, "C_{k2}(theta)");
          g[1] += 4.0 * b1 * k2 * k2 * f.st / (f.ct * f.ct * f.ct);
        }
        if (b2 != 0.0) {
          require_active(f.cp, "cos(phi)");
          g[1] -= 4.0 * b2 * k2 * f.ct / (st3 * f.cp * f.cp);
          g[2] += 4.0 * b2 * k2 * f.sp / (st2 * f.cp * f.cp * f.cp);
        }
        if (b3 != 0.0) {
          require_active(f.sp, "sin(phi)");
          g[1] -= 4.0 * b3 * k2 * f.ct / (st3 * f.sp * f.sp);
          g[2] -= 4.0 * b3 * k2 * f.cp / (st2 * f.sp * f.sp * f.sp);
        }
        g[4] = 2.0 * pt.p_theta;
        g[5] = 2.0 * pt.p_phi / st2;
        return g;
      });
}

SeparationValues separation_values(const PotentialSpec& spec,
                                   const CKParams& params,
                                   const PhasePoint& pt) {
  const double k2 = params.kappa2;
  const QFrame f(pt.q, params);
  SeparationValues out{};

  // I23(phi, p_phi)
  out.i23 = pt.p_phi * pt.p_phi;
  if (spec.beta2 != 0.0) {
    require_active(f.cp, "cos(phi)");
    out.i23 += 2.0 * spec.beta2 * k2 * f.sp * f.sp / (f.cp * f.cp);
  }
  if (spec.beta3 != 0.0) {
    require_active(f.sp, "sin(phi)");
    out.i23 += 2.0 * spec.beta3 * k2 * f.cp * f.cp / (f.sp * f.sp);
  }

  // I123(theta, p_theta; I23)
  require_active(f.st, "S_{k2}(theta)");
  out.i123 = pt.p_theta * pt.p_theta +
             (out.i23 + 2.0 * k2 * (spec.beta2 + spec.beta3)) /
                 (f.st * f.st);
  if (spec.beta1 != 0.0) {
    require_active(f.ct, "C_{k2}(theta)");
    out.i123 += 2.0 * spec.beta1 * k2 / (f.ct * f.ct);
  }

  // H(r, p_r; I123)
  require_active(f.sr, "S_{k1}(r)");
  out.h = 0.5 * pt.p_r * pt.p_r + radial_eval(spec, params, pt.q.r).value +
          out.i123 / (2.0 * k2 * f.sr * f.sr);
  return out;
}

SWIntegrals integrals_sw(const PotentialSpec& spec, const CKParams& params) {
  require_kind(spec, PotentialKind::SW, "integrals_sw");
  const double k2 = params.kappa2;
  const double b0 = spec.beta0;
  const double b1 = spec.beta1, b2 = spec.beta2, b3 = spec.beta3;

  auto w01 = coord_observable(
      "W01", params, [k2, b0, b1, params](const PolarPoint& q) {
        const QFrame f(q, params);
        CoordEval e;
        if (b0 != 0.0) {
          require_active(f.cr, "C_{k1}(r)");
          const double t2 = f.sr * f.sr / (f.cr * f.cr);
          e.value += 2.0 * b0 * t2 * f.ct * f.ct;
          e.dr += 4.0 * b0 * f.sr * f.ct * f.ct / (f.cr * f.cr * f.cr);
          e.dth -= 4.0 * k2 * b0 * t2 * f.ct * f.st;
        }
        if (b1 != 0.0) {
          require_active(f.sr, "S_{k1}(r)");
          require_active(f.ct, "C_{k2}(theta)");
          const double inv = f.cr * f.cr / (f.sr * f.sr);
          e.value += 2.0 * b1 * inv / (f.ct * f.ct);
          e.dr -= 4.0 * b1 * f.cr / (f.sr * f.sr * f.sr * f.ct * f.ct);
          e.dth += 4.0 * k2 * b1 * inv * f.st / (f.ct * f.ct * f.ct);
        }
        return e;
      });

  auto w0j = [&](double bj, bool use_cos) {
    return coord_observable(
        use_cos ? "W02" : "W03", params,
        [k2, b0, bj, use_cos, params](const PolarPoint& q) {
          const QFrame f(q, params);
          const double a = use_cos ? f.cp : f.sp;   // azimuthal factor
          const double b = use_cos ? f.sp : f.cp;   // its phi-derivative pair
          const double sign = use_cos ? -1.0 : 1.0; // d(a)/dphi = sign * b
          CoordEval e;
          if (b0 != 0.0) {
            require_active(f.cr, "C_{k1}(r)");
            const double t2 = f.sr * f.sr / (f.cr * f.cr);
            e.value += 2.0 * b0 * k2 * k2 * t2 * f.st * f.st * a * a;
            e.dr += 4.0 * b0 * k2 * k2 * f.sr * f.st * f.st * a * a /
                    (f.cr * f.cr * f.cr);
            e.dth += 4.0 * b0 * k2 * k2 * t2 * f.st * f.ct * a * a;
            e.dph += sign * 4.0 * b0 * k2 * k2 * t2 * f.st * f.st * a * b;
          }
          if (bj != 0.0) {
            require_active(f.sr, "S_{k1}(r)");
            require_active(f.st, "S_{k2}(theta)");
            require_active(a, use_cos ? "cos(phi)" : "sin(phi)");
            const double inv = f.cr * f.cr / (f.sr * f.sr);
            const double st2 = f.st * f.st;
            e.value += 2.0 * bj * k2 * inv / (st2 * a * a);
            e.dr -= 4.0 * bj * k2 * f.cr /
                    (f.sr * f.sr * f.sr * st2 * a * a);
            e.dth -= 4.0 * bj * k2 * inv * f.ct / (st2 * f.st * a * a);
            e.dph -= sign * 4.0 * bj * k2 * inv * b / (st2 * a * a * a);
          }
          return e;
        });
  };

  return SWIntegrals{
      (squared(generator(Gen::J01, params)) + w01).renamed("I01"),
      (squared(generator(Gen::J02, params)) + w0j(b2, true)).renamed("I02"),
      (squared(generator(Gen::J03, params)) + w0j(b3, false)).renamed("I03")};
}

Observable integral_L(int i, const PotentialSpec& spec, const CKParams& params) {
  if (i < 1 || i > 3)
    throw std::invalid_argument("integral_L: i must be 1, 2 or 3");
  // Any GKC or KC spec may build any L_i: L_i is conserved for GKC_i, and
  // L_j (j != i) becomes conserved once beta_j = 0.
  if (spec.kind != PotentialKind::KC && spec.gkc_index() == 0)
    throw std::invalid_argument("integral_L: spec must be a GKC or KC kind");
  const double k2 = params.kappa2;
  const double kk = spec.k;
  const double b1 = spec.beta1, b2 = spec.beta2, b3 = spec.beta3;

  if (i == 1) {
    auto tail = coord_observable(
        "V1", params, [k2, kk, b2, b3, params](const PolarPoint& q) {
          const QFrame f(q, params);
          CoordEval e;
          e.value = kk * k2 * f.ct;
          e.dth = -kk * k2 * k2 * f.st;
          if (b2 != 0.0 || b3 != 0.0) {
            require_active(f.sr, "S_{k1}(r)");
            require_active(f.st, "S_{k2}(theta)");
            const double inv_tr = f.cr / f.sr;
            const double st2 = f.st * f.st;
            double p = 0.0, p_dph = 0.0;
            if (b2 != 0.0) {
              require_active(f.cp, "cos(phi)");
              p += b2 / (f.cp * f.cp);
              p_dph += 2.0 * b2 * f.sp / (f.cp * f.cp * f.cp);
            }
            if (b3 != 0.0) {
              require_active(f.sp, "sin(phi)");
              p += b3 / (f.sp * f.sp);
              p_dph -= 2.0 * b3 * f.cp / (f.sp * f.sp * f.sp);
            }
            e.value -= 2.0 * k2 * f.ct * inv_tr * p / st2;
            e.dr += 2.0 * k2 * f.ct * p / (st2 * f.sr * f.sr);
            e.dth += 2.0 * k2 * inv_tr * p * (k2 * st2 + 2.0 * f.ct * f.ct) /
                     (st2 * f.st);
            e.dph -= 2.0 * k2 * f.ct * inv_tr * p_dph / st2;
          }
          return e;
        });
    const Observable j02 = generator(Gen::J02, params);
    const Observable j03 = generator(Gen::J03, params);
    const Observable j12 = generator(Gen::J12, params);
    const Observable j13 = generator(Gen::J13, params);
    return (-1.0 * (j02 * j12) - j03 * j13 + tail).renamed("L1");
  }

  // L2 and L3 share their structure; `use_cos` selects the azimuthal pair.
  const bool use_cos = (i == 2);
  const double b_theta = b1;
  const double b_phi = use_cos ? b3 : b2;
  auto tail = coord_observable(
      use_cos ? "V2" : "V3", params,
      [k2, kk, b_theta, b_phi, use_cos, params](const PolarPoint& q) {
        const QFrame f(q, params);
        const double a = use_cos ? f.cp : f.sp;
        const double b = use_cos ? f.sp : f.cp;
        const double sign = use_cos ? -1.0 : 1.0;  // d(a)/dphi = sign*b
        CoordEval e;
        e.value = kk * k2 * f.st * a;
        e.dth = kk * k2 * f.ct * a;
        e.dph = sign * kk * k2 * f.st * b;
        if (b_theta != 0.0 || b_phi != 0.0) {
          require_active(f.sr, "S_{k1}(r)");
          const double inv_tr = f.cr / f.sr;
          double g = 0.0, g_dth = 0.0, g_dph = 0.0;
          if (b_theta != 0.0) {
            require_active(f.ct, "C_{k2}(theta)");
            const double ct3 = f.ct * f.ct * f.ct;
            g += b_theta * f.st / (f.ct * f.ct);
            g_dth += b_theta * (f.ct * f.ct + 2.0 * k2 * f.st * f.st) / ct3;
          }
          if (b_phi != 0.0) {
            require_active(f.st, "S_{k2}(theta)");
            require_active(b, use_cos ? "sin(phi)" : "cos(phi)");
            g += b_phi / (f.st * b * b);
            g_dth -= b_phi * f.ct / (f.st * f.st * b * b);
            // d(1/b^2)/dphi = -2 b'/b^3 with b' = -sign*a
            g_dph += 2.0 * sign * b_phi * a / (f.st * b * b * b);
          }
          e.value -= 2.0 * k2 * a * inv_tr * g;
          e.dr += 2.0 * k2 * a * g / (f.sr * f.sr);
          e.dth -= 2.0 * k2 * a * inv_tr * g_dth;
          e.dph -= 2.0 * k2 * inv_tr * (sign * b * g + a * g_dph);
        }
        return e;
      });
  const Observable j01 = generator(Gen::J01, params);
  const Observable j23 = generator(Gen::J23, params);
  if (use_cos) {
    const Observable j12 = generator(Gen::J12, params);
    const Observable j03 = generator(Gen::J03, params);
    return (j01 * j12 - j03 * j23 + tail).renamed("L2");
  }
  const Observable j13 = generator(Gen::J13, params);
  const Observable j02 = generator(Gen::J02, params);
  return (j01 * j13 + j02 * j23 + tail).renamed("L3");
}

std::array<Observable, 3> lrl_vector(double k, const CKParams& params) {
  const PotentialSpec spec = PotentialSpec::kc(k);
  return {integral_L(1, spec, params), integral_L(2, spec, params),
          integral_L(3, spec, params)};
}

double potential_distance_form(const PotentialSpec& spec, const CKParams& params,
                               const PolarPoint& q) {
  const DistanceTriple d = distances(q, params);
  const double k1 = params.kappa1;
  const double k12 = params.kappa1 * params.kappa2;
  double u = radial_eval(spec, params, q.r).value;
  auto term = [](double beta, Kappa label, double dist) {
    const double s = sk(label, dist);
    require_active(s, "S(distance)");
    return beta / (s * s);
  };
  if (spec.beta1 != 0.0) u += term(spec.beta1, k1, d.x);
  if (spec.beta2 != 0.0) u += term(spec.beta2, k12, d.y);
  if (spec.beta3 != 0.0) u += term(spec.beta3, k12, d.z);
  return u;
}

double sw_alternate_form(const PotentialSpec& spec, const CKParams& params,
                         const PolarPoint& q) {
  require_kind(spec, PotentialKind::SW, "sw_alternate_form");
  const DistanceTriple d = distances(q, params);
  const double half_pi = std::asin(1.0);

  auto tan2 = [](double x) {
    const double t = std::tan(x);
    return t * t;
  };
  auto sinh2 = [](double x) {
    const double s = std::sinh(x);
    require_active(s, "sinh(distance)");
    return s * s;
  };
  // Oscillator with center a quadrant away: beta/sin^2(d) = beta tan^2(pi/2-d) + beta.
  auto osc = [&](double beta, double dist) {
    return beta * tan2(half_pi - dist) + beta;
  };

  if (params == CKParams::sphere()) {
    double u = spec.beta0 * tan2(q.r);
    if (spec.beta1 != 0.0) u += osc(spec.beta1, d.x);
    if (spec.beta2 != 0.0) u += osc(spec.beta2, d.y);
    if (spec.beta3 != 0.0) u += osc(spec.beta3, d.z);
    return u;
  }
  if (params == CKParams::anti_de_sitter()) {
    double u = spec.beta0 * tan2(q.r);
    if (spec.beta1 != 0.0) u += osc(spec.beta1, d.x);
    if (spec.beta2 != 0.0) u += spec.beta2 / sinh2(d.y);
    if (spec.beta3 != 0.0) u += spec.beta3 / sinh2(d.z);
    return u;
  }
  if (params == CKParams::de_sitter()) {
    const double th = std::tanh(q.r);
    double u = spec.beta0 * th * th;
    if (spec.beta1 != 0.0) u += spec.beta1 / sinh2(d.x);
    if (spec.beta2 != 0.0) u += osc(spec.beta2, d.y);
    if (spec.beta3 != 0.0) u += osc(spec.beta3, d.z);
    return u;
  }
  throw std::invalid_argument(
      "sw_alternate_form: defined on the S3, AdS and dS presets only");
}

}  // namespace ckspace
