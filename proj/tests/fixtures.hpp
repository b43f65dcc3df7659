#pragma once

// Canonical triangles shared by the unit and acceptance suites. Reference
// areas were computed independently at 40-digit precision from the tangent
// inner products and confirmed by a Richardson-extrapolated fan integral.

#include <cmath>

#include "dstrig/triangle.hpp"

namespace dstrig::fixtures {

inline DeSitterPoint pt(double x0, double x1, double x2) { return DeSitterPoint(Vec3(x0, x1, x2)); }

struct Fixture {
  const char* name;
  std::array<DeSitterPoint, 3> p;
  ProperName type;
  int distinguished;  // 0-based
  double area;
};

// Spatiolateral: a thin triangle over the waist ellipse.
inline Fixture sp0() {
  return {"SP0",
          {pt(std::sinh(0.3), std::cosh(0.3), 0), pt(0, std::cos(1.0), std::sin(1.0)),
           pt(0, std::cos(1.0), -std::sin(1.0))},
          ProperName::Spatiolateral,
          0,
          0.32606536922688069};
}

inline Fixture cr0() {
  return {"CR0",
          {pt(std::sinh(1.0), std::cosh(1.0), 0), pt(0, std::cos(0.5), std::sin(0.5)),
           pt(0, std::cos(0.5), -std::sin(0.5))},
          ProperName::Chronosceles,
          0,
          0.47420060688787796};
}

// Tempolateral. p3 sits at spatial angle 0.8; at angle 1.0 it would be
// proportional to p1 + p2 and the triangle would collapse onto one geodesic.
inline Fixture tp0() {
  return {"TP0",
          {pt(std::sinh(2.0), std::cosh(2.0), 0),
           pt(-std::sinh(2.0), std::cosh(2.0) * std::cos(2.0), std::cosh(2.0) * std::sin(2.0)),
           pt(0, std::cos(0.8), std::sin(0.8))},
          ProperName::Tempolateral,
          2,
          0.48777097419015214};
}

inline Fixture ch0() {
  return {"CH0",
          {pt(0, std::cos(1.2), std::sin(1.2)), pt(-std::sinh(0.5), std::cosh(0.5), 0),
           pt(std::sinh(0.5), std::cosh(0.5), 0)},
          ProperName::Chorosceles,
          0,
          0.67661170791495081};
}

/// Collinear tempolateral-looking triple (p3 proportional to p1 + p2).
inline std::array<DeSitterPoint, 3> tp0_collinear() {
  return {pt(std::sinh(2.0), std::cosh(2.0), 0),
          pt(-std::sinh(2.0), std::cosh(2.0) * std::cos(2.0), std::cosh(2.0) * std::sin(2.0)),
          pt(0, std::cos(1.0), std::sin(1.0))};
}

inline std::array<Fixture, 4> all() { return {sp0(), tp0(), ch0(), cr0()}; }

inline DeSitterTriangle build(const Fixture& f) { return build_triangle(f.p[0], f.p[1], f.p[2]); }

}  // namespace dstrig::fixtures
