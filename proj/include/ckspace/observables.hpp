#pragma once

#include <array>
#include <functional>

#include "ckspace/phasespace.hpp"

// The superintegrable potential family
//   U = F(r) + (1/S^2_{k1}(r)) [ b1/C^2_{k2}(th)
//        + b2/(S^2_{k2}(th) cos^2 phi) + b3/(S^2_{k2}(th) sin^2 phi) ]
// and its integrals of motion, plus the two maximally superintegrable
// members: the Smorodinsky-Winternitz choice F = b0 T^2_{k1}(r) and the
// generalized Kepler-Coulomb choice F = -k/T_{k1}(r), with their extra
// integrals (I_{0i}, L_i) and the Laplace-Runge-Lenz vector.
//
// Inactive barrier terms (beta = 0) are never evaluated, so e.g. the pure
// Kepler-Coulomb system works on the full chart.

namespace ckspace {

enum class PotentialKind { Family, SW, GKC1, GKC2, GKC3, KC };

const char* potential_kind_name(PotentialKind kind);

struct PotentialSpec {
  PotentialKind kind = PotentialKind::Family;
  double beta0 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double beta3 = 0.0;
  double k = 0.0;
  // Radial term and its derivative; Family kind only (null means F = 0).
  std::function<double(double)> radial;
  std::function<double(double)> radial_deriv;

  static PotentialSpec family(double b1, double b2, double b3,
                              std::function<double(double)> f = nullptr,
                              std::function<double(double)> df = nullptr);
  static PotentialSpec sw(double b0, double b1, double b2, double b3);
  static PotentialSpec gkc1(double k, double b2, double b3);
  static PotentialSpec gkc2(double k, double b1, double b3);
  static PotentialSpec gkc3(double k, double b1, double b2);
  static PotentialSpec kc(double k);

  // The GKC index (1, 2 or 3), or 0 for the other kinds.
  int gkc_index() const;
};

// U alone (no kinetic term); useful for the cross-form checks.
Observable potential(const PotentialSpec& spec, const CKParams& params);

// H = T + U for any kind.
Observable hamiltonian(const PotentialSpec& spec, const CKParams& params);

// Kind-checked fronts for the two named systems.
Observable family_hamiltonian(const PotentialSpec& spec, const CKParams& params);
Observable sw_hamiltonian(const PotentialSpec& spec, const CKParams& params);
Observable gkc_hamiltonian(int i, const PotentialSpec& spec,
                           const CKParams& params);

// The three quadratic integrals tied to the (Lorentz) rotation generators.
struct RotationIntegrals {
  Observable i12;
  Observable i13;
  Observable i23;
};
RotationIntegrals integrals_rotation(const PotentialSpec& spec,
                                     const CKParams& params);

// I123 = I12 + I13 + k2 I23 + 2 k2 (b1 + k2 b2 + k2 b3); tied to the
// Casimir of the rotation subalgebra.
Observable integral_i123(const PotentialSpec& spec, const CKParams& params);

// The separated one-degree-of-freedom chain: I23(phi, p_phi),
// I123(theta, p_theta; I23), H(r, p_r; I123).
struct SeparationValues {
  double i23;
  double i123;
  double h;
};
SeparationValues separation_values(const PotentialSpec& spec,
                                   const CKParams& params,
                                   const PhasePoint& pt);

// SW extra integrals from the translation generators (kind SW required).
struct SWIntegrals {
  Observable i01;
  Observable i02;
  Observable i03;
};
SWIntegrals integrals_sw(const PotentialSpec& spec, const CKParams& params);

// GKC extra integral L_i (kind GKCi or KC required); built by composing the
// generator observables, e.g. L3 = J01 J13 + J02 J23 + tail(r, theta, phi).
Observable integral_L(int i, const PotentialSpec& spec, const CKParams& params);

// Laplace-Runge-Lenz components for the pure KC system (all beta = 0).
std::array<Observable, 3> lrl_vector(double k, const CKParams& params);

// U rewritten through the geodesic distances (x, y, z):
//   F(r) + b1/S^2_{k1}(x) + b2/S^2_{k1 k2}(y) + b3/S^2_{k1 k2}(z).
// Throws BranchError where a distance leaves its principal branch.
double potential_distance_form(const PotentialSpec& spec, const CKParams& params,
                               const PolarPoint& q);

// The oscillator rewrites with their explicit additive constants:
// S^3: sum_i (b_i tan^2 r_i + b_i); AdS: b1 tan^2 r1 + b1 (x only);
// dS: b2 tan^2 r2 + b3 tan^2 r3 + b2 + b3 (y, z only). Only defined on
// those three spaces; throws std::invalid_argument elsewhere.
double sw_alternate_form(const PotentialSpec& spec, const CKParams& params,
                         const PolarPoint& q);

}  // namespace ckspace
