#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dstrig/girard.hpp"
#include "dstrig/oracle.hpp"

namespace dstrig::oracle {

inline constexpr double kProductIdentityTol = 1e-8;
inline constexpr double kComplexAreaTol = 1e-8;
inline constexpr double kProductFormTol = 1e-9;
inline constexpr double kOracleFloor = 1e-3;
inline constexpr double kOracleErrorFactor = 3.0;

struct VerifyOptions {
  int grid = 64;
  double u_max = 2.0;
  unsigned workers = 0;
  /// Fault injection: negate one outer normal before checking.
  bool corrupt_normals = false;
};

struct InvariantTally {
  std::string name;
  int checked = 0;
  int passed = 0;
  double worst = 0;  // largest residual seen, where one is defined

  bool ok() const { return passed == checked; }
};

struct VerifyReport {
  ProperName target = ProperName::None;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<InvariantTally> invariants;
  /// Trials whose oracle did not converge; counted as oracle failures.
  int oracle_nonconvergent = 0;
  std::vector<std::string> failures;

  const InvariantTally* find(const std::string& name) const;
  bool all_passed() const;
};

/// Runs the area formulas, the product form, the complex area and the
/// oracle on `trials` seeded random triangles of one of the four supported
/// types, tallying every invariant.
VerifyReport verify_type(ProperName target, int trials, std::uint64_t seed, const VerifyOptions& options = {});

}  // namespace dstrig::oracle
