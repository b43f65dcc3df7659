#pragma once

// Interior angles and Girard-type area formulas for de Sitter triangles
// with non-null edges.

#include <array>
#include <string_view>

#include "dstrig/triangle.hpp"

namespace dstrig {

/// Angles indexed by vertex: theta[j] and phi[j] live at vertex j, between
/// the tangents toward the other two vertices. theta is signed when the two
/// tangents have different causal types.
struct AngleSet {
  std::array<double, 3> theta{};
  std::array<PseudoAngle<double>, 3> phi{};
};

enum class AreaFormula {
  ContractibleSpatiolateral,  // V = -theta_1 + theta_2 + theta_3
  Tempolateral,               // V =  theta_1 - theta_2 - theta_3
  Chorosceles,                // V =  theta_1 + theta_2 + theta_3
  Chronosceles,               // V = -theta_1 + theta_2 + theta_3
};

/// Identifier used for the formula in reports ("Thm7" .. "Thm10").
std::string_view formula_token(AreaFormula formula);

struct AreaResult {
  Complex complex_area;
  double real_area = 0;
  AreaFormula formula_used = AreaFormula::ContractibleSpatiolateral;
  int distinguished_vertex = 0;
  /// Original vertex indices in formula order; relabeling[0] is the
  /// distinguished vertex.
  std::array<int, 3> relabeling{};
  AngleSet angles;
};

AngleSet interior_angles(const DeSitterTriangle& tri);

/// Sum of the three pseudo-angles minus pi; purely imaginary with positive
/// imaginary part for every supported triangle.
Complex complex_area(const DeSitterTriangle& tri);

AreaResult girard_area(const DeSitterTriangle& tri);

/// Same area evaluated directly from the tangent inner products with
/// arccosh / arcsinh, without going through the angle tables.
double girard_area_from_products(const DeSitterTriangle& tri);

/// Checks the sign pattern of <V_j^k, V_j^l> the area formulas rely on,
/// after moving the distinguished vertex first.
bool sign_pattern_holds(const DeSitterTriangle& tri);

}  // namespace dstrig
