#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dstrig/girard.hpp"
#include "dstrig/oracle.hpp"
#include "fixtures.hpp"

using namespace dstrig;

namespace {

template <typename Fn>
ErrorCode error_of(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::InvalidArgument;
}

const std::array<ProperName, 4> kSupported{ProperName::Spatiolateral, ProperName::Tempolateral,
                                           ProperName::Chorosceles, ProperName::Chronosceles};

}  // namespace

TEST_CASE("pseudo-angle branches at the fixtures") {
  const auto branches = [](const fixtures::Fixture& f) {
    const AngleSet a = interior_angles(fixtures::build(f));
    const auto [k, l] = other_vertices(f.distinguished);
    return std::array<PseudoAngleBranch, 3>{a.phi[f.distinguished].branch, a.phi[k].branch, a.phi[l].branch};
  };
  using B = PseudoAngleBranch;
  CHECK(branches(fixtures::tp0()) == std::array{B::PiPlusImag, B::NegImag, B::NegImag});
  CHECK(branches(fixtures::sp0()) == std::array{B::PiMinusImag, B::PureImag, B::PureImag});
  CHECK(branches(fixtures::ch0()) == std::array{B::PureImag, B::HalfPiPlusImag, B::HalfPiPlusImag});
  CHECK(branches(fixtures::cr0()) == std::array{B::NegImag, B::HalfPiPlusImag, B::HalfPiPlusImag});
}

TEST_CASE("complex area is the formula area times i") {
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    const DeSitterTriangle tri = fixtures::build(f);
    const AngleSet a = interior_angles(tri);
    const auto [k, l] = other_vertices(f.distinguished);
    const double d = a.theta[f.distinguished];
    double expected = 0;
    switch (f.type) {
      case ProperName::Spatiolateral: expected = -d + a.theta[k] + a.theta[l]; break;
      case ProperName::Tempolateral: expected = d - a.theta[k] - a.theta[l]; break;
      case ProperName::Chorosceles: expected = d + a.theta[k] + a.theta[l]; break;
      case ProperName::Chronosceles: expected = -d + a.theta[k] + a.theta[l]; break;
      default: FAIL("unexpected fixture type");
    }
    const Complex z = complex_area(tri);
    CHECK(std::abs(z.real()) <= 1e-12);
    CHECK(z.imag() == doctest::Approx(expected).epsilon(1e-12));
    CHECK(girard_area(tri).real_area == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("fixture areas match the frozen reference values") {
  for (const auto& f : fixtures::all()) {
    CAPTURE(f.name);
    const DeSitterTriangle tri = fixtures::build(f);
    const AreaResult r = girard_area(tri);
    CHECK(std::abs(r.real_area - f.area) <= 1e-12);
    CHECK(std::abs(girard_area_from_products(tri) - f.area) <= 1e-12);
    CHECK(r.distinguished_vertex == f.distinguished);
    CHECK(r.relabeling[0] == f.distinguished);
    CHECK(std::abs(r.complex_area - complex_area(tri)) <= 1e-14);
  }
}

TEST_CASE("formula tokens") {
  CHECK(girard_area(fixtures::build(fixtures::sp0())).formula_used == AreaFormula::ContractibleSpatiolateral);
  CHECK(formula_token(AreaFormula::ContractibleSpatiolateral) == "Thm7");
  CHECK(formula_token(AreaFormula::Tempolateral) == "Thm8");
  CHECK(formula_token(AreaFormula::Chorosceles) == "Thm9");
  CHECK(formula_token(AreaFormula::Chronosceles) == "Thm10");
}

TEST_CASE("tempolateral angle at the distinguished vertex exceeds the other two combined") {
  const AreaResult r = girard_area(fixtures::build(fixtures::tp0()));
  const auto& th = r.angles.theta;
  CHECK(th[r.relabeling[0]] > th[r.relabeling[1]] + th[r.relabeling[2]]);
}

TEST_CASE("mixed-type angles are signed") {
  const AngleSet a = interior_angles(fixtures::build(fixtures::ch0()));
  const bool any_negative = a.theta[1] < 0 || a.theta[2] < 0;
  CHECK(any_negative);
}

TEST_CASE("area properties on random triangles of every type") {
  for (ProperName target : kSupported) {
    CAPTURE(to_string(target));
    oracle::TriangleGenerator generator({41, target});
    for (int i = 0; i < 200; ++i) {
      const DeSitterTriangle tri = generator.next();
      const AreaResult r = girard_area(tri);
      CHECK(r.real_area > 0);
      CHECK(sign_pattern_holds(tri));
      const Complex z = complex_area(tri);
      CHECK(std::abs(z.real()) <= 1e-8);
      CHECK(std::abs(z.imag() - r.real_area) <= 1e-8);
      CHECK(std::abs(girard_area_from_products(tri) - r.real_area) <= 1e-9);
      if (target == ProperName::Tempolateral) {
        const auto& th = r.angles.theta;
        CHECK(th[r.relabeling[0]] > th[r.relabeling[1]] + th[r.relabeling[2]]);
      }
    }
  }
}

TEST_CASE("area does not depend on vertex order") {
  for (ProperName target : kSupported) {
    oracle::TriangleGenerator generator({42, target});
    for (int i = 0; i < 30; ++i) {
      const auto p = generator.next_vertices();
      const double base = girard_area(build_triangle(p[0], p[1], p[2])).real_area;
      CHECK(girard_area(build_triangle(p[2], p[0], p[1])).real_area == doctest::Approx(base).epsilon(1e-12));
      CHECK(girard_area(build_triangle(p[1], p[0], p[2])).real_area == doctest::Approx(base).epsilon(1e-12));
    }
  }
}

TEST_CASE("area errors") {
  auto p = fixtures::sp0().p;
  p[0] = p[0].antipode();
  const DeSitterTriangle flipped = build_triangle(p[0], p[1], p[2]);
  CHECK(error_of([&] { girard_area(flipped); }) == ErrorCode::NonContractible);
  CHECK(error_of([&] { girard_area_from_products(flipped); }) == ErrorCode::NonContractible);
  CHECK(error_of([&] { complex_area(flipped); }) == ErrorCode::NonContractible);

  const auto lc = fixtures::tp0_collinear();
  CHECK(error_of([&] { build_triangle(lc[0], lc[1], lc[2]); }) == ErrorCode::DegenerateTriangle);
}
