#include "ckspace/liealg.hpp"

#include <stdexcept>

namespace ckspace {

CKParams::CKParams(double k1, double k2) : kappa1(k1), kappa2(k2) {
  if (k2 == 0.0)
    throw std::invalid_argument(
        "CKParams: kappa2 = 0 degenerates the metric (Newtonian contraction "
        "is out of range)");
}

std::optional<CKParams> CKParams::preset(std::string_view name) {
  if (name == "s3") return sphere();
  if (name == "e3") return euclidean();
  if (name == "h3") return hyperbolic();
  if (name == "ads") return anti_de_sitter();
  if (name == "m") return minkowski();
  if (name == "ds") return de_sitter();
  return std::nullopt;
}

const std::array<std::pair<const char*, CKParams>, 6>& canonical_spaces() {
  static const std::array<std::pair<const char*, CKParams>, 6> spaces = {{
      {"s3", CKParams::sphere()},
      {"e3", CKParams::euclidean()},
      {"h3", CKParams::hyperbolic()},
      {"ads", CKParams::anti_de_sitter()},
      {"m", CKParams::minkowski()},
      {"ds", CKParams::de_sitter()},
  }};
  return spaces;
}

GeneratorIndex generator_pair(Gen g) {
  switch (g) {
    case Gen::J01: return {0, 1};
    case Gen::J02: return {0, 2};
    case Gen::J03: return {0, 3};
    case Gen::J12: return {1, 2};
    case Gen::J13: return {1, 3};
    case Gen::J23: return {2, 3};
  }
  throw std::invalid_argument("generator_pair: bad Gen");
}

Gen generator_from_pair(int mu, int nu) {
  for (Gen g : kAllGenerators) {
    const GeneratorIndex p = generator_pair(g);
    if (p.mu == mu && p.nu == nu) return g;
  }
  throw std::invalid_argument("generator_from_pair: not one of the six pairs");
}

const char* generator_name(Gen g) {
  switch (g) {
    case Gen::J01: return "J01";
    case Gen::J02: return "J02";
    case Gen::J03: return "J03";
    case Gen::J12: return "J12";
    case Gen::J13: return "J13";
    case Gen::J23: return "J23";
  }
  return "?";
}

AlgebraElement lie_bracket(Gen a, Gen b, const CKParams& params) {
  const double k1 = params.kappa1;
  const double k2 = params.kappa2;

  // [a, b] for a < b in enum order; the full table follows by antisymmetry.
  auto ordered = [&](Gen x, Gen y) -> AlgebraElement {
    using enum Gen;
    if (x == J01 && y == J02) return AlgebraElement::basis(J12, k1);
    if (x == J01 && y == J03) return AlgebraElement::basis(J13, k1);
    if (x == J01 && y == J12) return AlgebraElement::basis(J02, -1.0);
    if (x == J01 && y == J13) return AlgebraElement::basis(J03, -1.0);
    if (x == J01 && y == J23) return {};
    if (x == J02 && y == J03) return AlgebraElement::basis(J23, k1 * k2);
    if (x == J02 && y == J12) return AlgebraElement::basis(J01, k2);
    if (x == J02 && y == J13) return {};
    if (x == J02 && y == J23) return AlgebraElement::basis(J03, -1.0);
    if (x == J03 && y == J12) return {};
    if (x == J03 && y == J13) return AlgebraElement::basis(J01, k2);
    if (x == J03 && y == J23) return AlgebraElement::basis(J02, 1.0);
    if (x == J12 && y == J13) return AlgebraElement::basis(J23, k2);
    if (x == J12 && y == J23) return AlgebraElement::basis(J13, -1.0);
    if (x == J13 && y == J23) return AlgebraElement::basis(J12, 1.0);
    return {};
  };

  if (a == b) return {};
  if (static_cast<int>(a) < static_cast<int>(b)) return ordered(a, b);
  AlgebraElement e = ordered(b, a);
  for (double& c : e.coeffs) c = -c;
  return e;
}

StructureTable structure_constants(const CKParams& params) {
  StructureTable table;
  for (Gen a : kAllGenerators)
    for (Gen b : kAllGenerators)
      table[static_cast<int>(a)][static_cast<int>(b)] =
          lie_bracket(a, b, params);
  return table;
}

namespace {

// Curvature label of the 2x2 block of J_{mu nu}: the (mu, nu) entry of the
// generator matrix is -label, the (nu, mu) entry is +1.
double block_label(Gen g, const CKParams& params) {
  switch (g) {
    case Gen::J01: return params.kappa1;
    case Gen::J02:
    case Gen::J03: return params.kappa1 * params.kappa2;
    case Gen::J12:
    case Gen::J13: return params.kappa2;
    case Gen::J23: return 1.0;
  }
  return 0.0;
}

}  // namespace

Eigen::Matrix4d generator_matrix(Gen g, const CKParams& params) {
  const GeneratorIndex p = generator_pair(g);
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(p.mu, p.nu) = -block_label(g, params);
  m(p.nu, p.mu) = 1.0;
  return m;
}

Eigen::Matrix4d bilinear_form(const CKParams& params) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m(0, 0) = 1.0;
  m(1, 1) = params.kappa1;
  m(2, 2) = params.kappa1 * params.kappa2;
  m(3, 3) = params.kappa1 * params.kappa2;
  return m;
}

Eigen::Matrix4d one_param_subgroup(Gen g, double x, const CKParams& params) {
  const GeneratorIndex p = generator_pair(g);
  const double label = block_label(g, params);
  const double c = ck(label, x);
  const double s = sk(label, x);
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m(p.mu, p.mu) = c;
  m(p.mu, p.nu) = -label * s;
  m(p.nu, p.mu) = s;
  m(p.nu, p.nu) = c;
  return m;
}

double casimir_c1(const std::array<double, 6>& j, const CKParams& params) {
  const double k1 = params.kappa1;
  const double k2 = params.kappa2;
  auto v = [&](Gen g) { return j[static_cast<int>(g)]; };
  return k2 * v(Gen::J01) * v(Gen::J01) + v(Gen::J02) * v(Gen::J02) +
         v(Gen::J03) * v(Gen::J03) + k1 * v(Gen::J12) * v(Gen::J12) +
         k1 * v(Gen::J13) * v(Gen::J13) +
         k1 * k2 * v(Gen::J23) * v(Gen::J23);
}

double casimir_c2(const std::array<double, 6>& j, const CKParams& params) {
  const double k2 = params.kappa2;
  auto v = [&](Gen g) { return j[static_cast<int>(g)]; };
  return k2 * v(Gen::J01) * v(Gen::J23) - v(Gen::J02) * v(Gen::J13) +
         v(Gen::J03) * v(Gen::J12);
}

Gen kinematical_to_generator(Kinematical label) {
  switch (label) {
    case Kinematical::P0: return Gen::J01;
    case Kinematical::P1: return Gen::J02;
    case Kinematical::P2: return Gen::J03;
    case Kinematical::K1: return Gen::J12;
    case Kinematical::K2: return Gen::J13;
    case Kinematical::J: return Gen::J23;
  }
  throw std::invalid_argument("kinematical_to_generator: bad label");
}

Kinematical generator_to_kinematical(Gen g) {
  switch (g) {
    case Gen::J01: return Kinematical::P0;
    case Gen::J02: return Kinematical::P1;
    case Gen::J03: return Kinematical::P2;
    case Gen::J12: return Kinematical::K1;
    case Gen::J13: return Kinematical::K2;
    case Gen::J23: return Kinematical::J;
  }
  throw std::invalid_argument("generator_to_kinematical: bad Gen");
}

const char* kinematical_name(Kinematical label) {
  switch (label) {
    case Kinematical::P0: return "P0";
    case Kinematical::P1: return "P1";
    case Kinematical::P2: return "P2";
    case Kinematical::K1: return "K1";
    case Kinematical::K2: return "K2";
    case Kinematical::J: return "J";
  }
  return "?";
}

}  // namespace ckspace
