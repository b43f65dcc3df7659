#include "dstrig/girard.hpp"

#include <cmath>
#include <numbers>

namespace dstrig {

namespace {

void require_supported(const DeSitterTriangle& tri) {
  if (!has_non_null_edges(tri.proper_name())) {
    throw Error(ErrorCode::UnsupportedTriangleType,
                "no area formula for a " + std::string(to_string(tri.proper_name())) + " triangle");
  }
  if (tri.proper_name() == ProperName::Spatiolateral && !is_contractible(tri)) {
    throw Error(ErrorCode::NonContractible,
                "a non-contractible spatiolateral triangle bounds no region of the de Sitter surface");
  }
}

AreaFormula formula_for(ProperName name) {
  switch (name) {
    case ProperName::Spatiolateral: return AreaFormula::ContractibleSpatiolateral;
    case ProperName::Tempolateral: return AreaFormula::Tempolateral;
    case ProperName::Chorosceles: return AreaFormula::Chorosceles;
    case ProperName::Chronosceles: return AreaFormula::Chronosceles;
    default: break;
  }
  throw Error(ErrorCode::UnsupportedTriangleType, "no area formula for this triangle type");
}

std::array<int, 3> relabel(int d) {
  const auto [k, l] = other_vertices(d);
  return {d, k, l};
}

// Signed combination (s1, s2, s3) applied to the relabeled angles.
std::array<double, 3> formula_signs(AreaFormula f) {
  switch (f) {
    case AreaFormula::ContractibleSpatiolateral: return {-1, 1, 1};
    case AreaFormula::Tempolateral: return {1, -1, -1};
    case AreaFormula::Chorosceles: return {1, 1, 1};
    case AreaFormula::Chronosceles: return {-1, 1, 1};
  }
  return {0, 0, 0};
}

double checked_acosh(double x) {
  if (!(x >= 1)) throw Error(ErrorCode::NotApplicable, "arccosh argument below 1: " + std::to_string(x));
  return std::acosh(x);
}

}  // namespace

std::string_view formula_token(AreaFormula formula) {
  switch (formula) {
    case AreaFormula::ContractibleSpatiolateral: return "Thm7";
    case AreaFormula::Tempolateral: return "Thm8";
    case AreaFormula::Chorosceles: return "Thm9";
    case AreaFormula::Chronosceles: return "Thm10";
  }
  return "?";
}

AngleSet interior_angles(const DeSitterTriangle& tri) {
  if (!has_non_null_edges(tri.proper_name())) {
    throw Error(ErrorCode::UnsupportedTriangleType, "interior angles need non-null edges");
  }
  AngleSet angles;
  for (int j = 0; j < 3; ++j) {
    const auto [k, l] = other_vertices(j);
    angles.phi[j] = pseudo_angle(tri.tangent(j, k), tri.tangent(j, l));
    angles.theta[j] = real_angle(tri.tangent(j, k), tri.tangent(j, l));
  }
  return angles;
}

Complex complex_area(const DeSitterTriangle& tri) {
  require_supported(tri);
  const AngleSet angles = interior_angles(tri);
  return angles.phi[0].value + angles.phi[1].value + angles.phi[2].value - std::numbers::pi;
}

AreaResult girard_area(const DeSitterTriangle& tri) {
  require_supported(tri);
  AreaResult result;
  result.formula_used = formula_for(tri.proper_name());
  result.distinguished_vertex = distinguished_vertex(tri);
  result.relabeling = relabel(result.distinguished_vertex);
  result.angles = interior_angles(tri);

  const auto signs = formula_signs(result.formula_used);
  double area = 0;
  Complex sum = -std::numbers::pi;
  for (int i = 0; i < 3; ++i) {
    const int v = result.relabeling[i];
    area += signs[i] * result.angles.theta[v];
    sum += result.angles.phi[v].value;
  }
  result.real_area = area;
  result.complex_area = sum;
  return result;
}

double girard_area_from_products(const DeSitterTriangle& tri) {
  require_supported(tri);
  const auto r = relabel(distinguished_vertex(tri));
  const double g1 = tri.tangent_product(r[0]);
  const double g2 = tri.tangent_product(r[1]);
  const double g3 = tri.tangent_product(r[2]);
  switch (formula_for(tri.proper_name())) {
    case AreaFormula::ContractibleSpatiolateral:
      return -checked_acosh(-g1) + checked_acosh(g2) + checked_acosh(g3);
    case AreaFormula::Tempolateral:
      return checked_acosh(g1) - checked_acosh(-g2) - checked_acosh(-g3);
    case AreaFormula::Chorosceles:
      return checked_acosh(g1) + std::asinh(g2) + std::asinh(g3);
    case AreaFormula::Chronosceles:
      return -checked_acosh(-g1) + std::asinh(g2) + std::asinh(g3);
  }
  return 0;
}

bool sign_pattern_holds(const DeSitterTriangle& tri) {
  require_supported(tri);
  const auto r = relabel(distinguished_vertex(tri));
  const double g1 = tri.tangent_product(r[0]);
  const double g2 = tri.tangent_product(r[1]);
  const double g3 = tri.tangent_product(r[2]);
  switch (tri.proper_name()) {
    case ProperName::Spatiolateral: return g1 < -1 && g2 > 1 && g3 > 1;
    case ProperName::Tempolateral: return g1 > 1 && g2 < -1 && g3 < -1;
    case ProperName::Chorosceles: return g1 > 1;
    case ProperName::Chronosceles: return g1 < -1;
    default: return false;
  }
}

}  // namespace dstrig
