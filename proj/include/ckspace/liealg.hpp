#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Dense>

#include "ckspace/ktrig.hpp"

// The Lie algebra so_{k1,k2}(4): structure constants, 4x4 vector
// representation, one-parameter subgroups, the invariant bilinear form,
// Casimir evaluation, and the kinematical relabelling used when kappa2 < 0.

namespace ckspace {

// Cayley-Klein pair: kappa1 is the constant curvature of the space of
// points, kappa2 fixes the metric signature diag(1, kappa2, kappa2).
// kappa2 = 0 degenerates the metric and is rejected.
struct CKParams {
  double kappa1;
  double kappa2;

  CKParams(double k1, double k2);

  static CKParams sphere() { return {1.0, 1.0}; }          // S^3
  static CKParams euclidean() { return {0.0, 1.0}; }       // E^3
  static CKParams hyperbolic() { return {-1.0, 1.0}; }     // H^3
  static CKParams anti_de_sitter() { return {1.0, -1.0}; } // AdS^{2+1}
  static CKParams minkowski() { return {0.0, -1.0}; }      // M^{2+1}
  static CKParams de_sitter() { return {-1.0, -1.0}; }     // dS^{2+1}

  // Preset lookup by short name: s3, e3, h3, ads, m, ds.
  static std::optional<CKParams> preset(std::string_view name);

  bool operator==(const CKParams&) const = default;
};

// The six canonical spaces in a fixed order (used by sweeps and the CLI).
const std::array<std::pair<const char*, CKParams>, 6>& canonical_spaces();

// Basis labels J_{mu nu}, 0 <= mu < nu <= 3, in lexicographic order.
enum class Gen : int { J01 = 0, J02 = 1, J03 = 2, J12 = 3, J13 = 4, J23 = 5 };

inline constexpr std::array<Gen, 6> kAllGenerators = {
    Gen::J01, Gen::J02, Gen::J03, Gen::J12, Gen::J13, Gen::J23};

struct GeneratorIndex {
  int mu;
  int nu;
};

GeneratorIndex generator_pair(Gen g);
Gen generator_from_pair(int mu, int nu);  // throws std::invalid_argument
const char* generator_name(Gen g);

// A linear combination of the six generators, coefficients in Gen order.
struct AlgebraElement {
  std::array<double, 6> coeffs{};

  double& operator[](Gen g) { return coeffs[static_cast<int>(g)]; }
  double operator[](Gen g) const { return coeffs[static_cast<int>(g)]; }

  static AlgebraElement basis(Gen g, double c = 1.0) {
    AlgebraElement e;
    e[g] = c;
    return e;
  }
};

// [a, b] expanded in the basis. Antisymmetric; satisfies Jacobi.
AlgebraElement lie_bracket(Gen a, Gen b, const CKParams& params);

using StructureTable = std::array<std::array<AlgebraElement, 6>, 6>;
StructureTable structure_constants(const CKParams& params);

// 4x4 vector representation: X^T I_k + I_k X = 0 with
// I_k = diag(1, kappa1, kappa1*kappa2, kappa1*kappa2).
Eigen::Matrix4d generator_matrix(Gen g, const CKParams& params);
Eigen::Matrix4d bilinear_form(const CKParams& params);

// exp(x J_{mu nu}) in closed form: a 2x2 curvature-labelled rotation block
// in rows/columns (mu, nu). Satisfies Y^T I_k Y = I_k.
Eigen::Matrix4d one_param_subgroup(Gen g, double x, const CKParams& params);

// Casimirs evaluated on a number assignment j (Gen order):
//   C1 = k2 J01^2 + J02^2 + J03^2 + k1 J12^2 + k1 J13^2 + k1 k2 J23^2
//   C2 = k2 J01 J23 - J02 J13 + J03 J12
double casimir_c1(const std::array<double, 6>& j, const CKParams& params);
double casimir_c2(const std::array<double, 6>& j, const CKParams& params);

// Kinematical relabelling for the spacetimes (kappa2 = -1/c^2):
// P0 = J01, P_i = J0,i+1, K_i = J1,i+1, J = J23.
enum class Kinematical : int { P0 = 0, P1 = 1, P2 = 2, K1 = 3, K2 = 4, J = 5 };

Gen kinematical_to_generator(Kinematical label);
Kinematical generator_to_kinematical(Gen g);
const char* kinematical_name(Kinematical label);

}  // namespace ckspace
