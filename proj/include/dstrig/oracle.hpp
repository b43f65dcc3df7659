#pragma once

// Brute-force area of a geodesic triangle by integrating the induced area
// element over a fan parameterization, plus seeded random triangle
// generators. Deliberately independent of the angle-based formulas.

#include <cstdint>
#include <optional>
#include <random>

#include "dstrig/triangle.hpp"

namespace dstrig::oracle {

struct OracleResult {
  double area = 0;        // midpoint-rule area at the finest grid
  double est_error = 0;   // |A_2n - A_n| / 3 for the final two grids
  int grid_s = 0;
  int grid_t = 0;
  int refinements = 0;    // number of grid levels evaluated
  int apex = 0;           // vertex used as the fan apex
};

struct IntegrationOptions {
  /// Extra doublings allowed when the error estimate fails to shrink.
  int max_extra_refinements = 2;
  /// Threads for grid evaluation; 0 picks hardware concurrency. The result
  /// does not depend on this value.
  unsigned workers = 1;
  /// Fan apex override; defaults to the distinguished vertex.
  std::optional<int> apex;
};

/// Point at parameter t on the geodesic from a to b. Works for any
/// <a,b> > -1, passing continuously through the null case.
Vec3 chord_point(const Vec3& a, const Vec3& b, double t);

/// Composite midpoint rule with n x n cells for the fan X(s,t) sweeping from
/// apex to the geodesic b -> c, with the base parameter s graded toward both
/// ends. Partials by central differences with step 1/(4n); the integrand is
/// sqrt(|det G|) of the Minkowski first fundamental form.
double fan_area(const Vec3& apex, const Vec3& b, const Vec3& c, int n, unsigned workers = 1);

/// Grid-refined fan integral with a Richardson error estimate. Evaluates
/// n/2, n and 2n and requires the estimate to shrink between the last two
/// levels, refining further up to max_extra_refinements.
OracleResult integrate_fan(const Vec3& apex, const Vec3& b, const Vec3& c, int n,
                           const IntegrationOptions& options = {});

/// Oracle area of a supported triangle at base grid n >= 8.
OracleResult integrate_area(const DeSitterTriangle& tri, int n, const IntegrationOptions& options = {});

/// Vertex chart (sinh u, cosh u cos psi, cosh u sin psi) covering the quadric.
DeSitterPoint chart_point(double u, double psi);

struct GeneratorConfig {
  std::uint64_t seed = 1;
  ProperName target = ProperName::Spatiolateral;
  double u_max = 2.0;
  int max_attempts = 200000;
};

/// Rejection sampler over the vertex chart. Successive calls to next()
/// continue one deterministic stream.
class TriangleGenerator {
 public:
  explicit TriangleGenerator(const GeneratorConfig& config);

  /// Vertices of the next triple whose classification matches the target
  /// (contractible only, for spatiolateral targets).
  std::array<DeSitterPoint, 3> next_vertices();
  DeSitterTriangle next();

 private:
  GeneratorConfig config_;
  std::mt19937_64 rng_;
};

DeSitterTriangle random_triangle(const GeneratorConfig& config);

}  // namespace dstrig::oracle
