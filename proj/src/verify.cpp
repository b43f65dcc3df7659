#include "dstrig/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace dstrig::oracle {

namespace {

struct Outcome {
  bool pass;
  double residual;
};

class Tallies {
 public:
  explicit Tallies(VerifyReport& report) : report_(report) {}

  void run(int trial, const std::string& name, const std::function<Outcome()>& check) {
    InvariantTally& t = slot(name);
    ++t.checked;
    try {
      const Outcome o = check();
      if (std::isfinite(o.residual)) t.worst = std::max(t.worst, o.residual);
      if (o.pass) {
        ++t.passed;
      } else {
        fail(trial, name, "residual " + std::to_string(o.residual));
      }
    } catch (const Error& e) {
      fail(trial, name, e.what());
    }
  }

 private:
  InvariantTally& slot(const std::string& name) {
    for (auto& t : report_.invariants) {
      if (t.name == name) return t;
    }
    report_.invariants.push_back({name});
    return report_.invariants.back();
  }

  void fail(int trial, const std::string& name, const std::string& detail) {
    report_.failures.push_back("trial " + std::to_string(trial) + " " + name + ": " + detail);
  }

  VerifyReport& report_;
};

double product_identity_residual(const DeSitterTriangle& tri) {
  double worst = 0;
  for (int j = 0; j < 3; ++j) {
    const auto [k, l] = other_vertices(j);
    worst = std::max(worst, std::abs(tri.tangent_product(j) - mink_inner(tri.normal(k), tri.normal(l))));
  }
  return worst;
}

// V_j^k lies in the plane of edge jk, whose normal is u_l for the third
// vertex l.
bool duality_holds(const DeSitterTriangle& tri) {
  for (int j = 0; j < 3; ++j) {
    for (int k : other_vertices(j)) {
      const int l = 3 - j - k;
      const CausalType v = causal_type(tri.tangent(j, k));
      const CausalType u = causal_type(tri.normal(l));
      if (v == CausalType::Null || u == CausalType::Null || v == u) return false;
    }
  }
  return true;
}

}  // namespace

const InvariantTally* VerifyReport::find(const std::string& name) const {
  for (const auto& t : invariants) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

bool VerifyReport::all_passed() const {
  return std::all_of(invariants.begin(), invariants.end(), [](const auto& t) { return t.ok(); });
}

VerifyReport verify_type(ProperName target, int trials, std::uint64_t seed, const VerifyOptions& options) {
  if (!has_non_null_edges(target)) {
    throw Error(ErrorCode::UnsupportedTriangleType,
                "verification needs one of the four non-null-edge types, got " + std::string(to_string(target)));
  }
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");

  VerifyReport report;
  report.target = target;
  report.trials = trials;
  report.seed = seed;
  Tallies tallies(report);

  TriangleGenerator generator({seed, target, options.u_max});
  IntegrationOptions integration;
  integration.workers = options.workers;

  for (int trial = 0; trial < trials; ++trial) {
    const DeSitterTriangle clean = generator.next();
    const DeSitterTriangle tri = options.corrupt_normals ? with_flipped_normal(clean, 0) : clean;

    tallies.run(trial, "product_identity", [&] {
      const double r = product_identity_residual(tri);
      return Outcome{r <= kProductIdentityTol, r};
    });
    tallies.run(trial, "normal_duality", [&] { return Outcome{duality_holds(tri), 0}; });

    // The distinguished vertex of a spatiolateral is read off the normals,
    // so everything downstream sees the corrupted triangle too.
    tallies.run(trial, "sign_pattern", [&] { return Outcome{sign_pattern_holds(tri), 0}; });
    tallies.run(trial, "complex_area_shape", [&] {
      const AreaResult area = girard_area(tri);
      const Complex z = complex_area(tri);
      const double r = std::max({std::abs(z.real()), std::abs(z.imag() - area.real_area),
                                 std::abs(area.complex_area - z)});
      return Outcome{r <= kComplexAreaTol && z.imag() > 0, r};
    });
    tallies.run(trial, "positive_area", [&] {
      const double v = girard_area(tri).real_area;
      return Outcome{v > 0, v > 0 ? 0 : -v};
    });
    tallies.run(trial, "product_form_agreement", [&] {
      const double r = std::abs(girard_area_from_products(tri) - girard_area(tri).real_area);
      return Outcome{r <= kProductFormTol, r};
    });

    if (target == ProperName::Tempolateral) {
      tallies.run(trial, "angle_inequality", [&] {
        const AreaResult a = girard_area(tri);
        const auto& th = a.angles.theta;
        const auto& r = a.relabeling;
        const double margin = th[r[0]] - th[r[1]] - th[r[2]];
        return Outcome{margin > 0, margin > 0 ? 0 : -margin};
      });
    }
    if (target == ProperName::Spatiolateral) {
      tallies.run(trial, "unique_same_cone_vertex",
                  [&] { return Outcome{same_cone_normal_vertices(tri).size() == 1, 0}; });
      tallies.run(trial, "antipodal_flip", [&] {
        const int d = distinguished_vertex(tri);
        std::array<DeSitterPoint, 3> p = tri.vertices();
        p[d] = p[d].antipode();
        const TriangleClass cls = classify_triangle(p[0], p[1], p[2]);
        const DeSitterTriangle flipped = build_triangle(p[0], p[1], p[2]);
        bool refused = false;
        try {
          girard_area(flipped);
        } catch (const Error& e) {
          refused = e.code() == ErrorCode::NonContractible;
        }
        const bool ok = cls.proper_name == ProperName::Spatiolateral && cls.contractible == false &&
                        same_cone_normal_vertices(flipped).size() == 3 && refused;
        return Outcome{ok, 0};
      });
    }

    tallies.run(trial, "oracle_agreement", [&] {
      const double formula = girard_area(tri).real_area;
      OracleResult o;
      try {
        o = integrate_area(tri, options.grid, integration);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NonConvergent) ++report.oracle_nonconvergent;
        throw;
      }
      const double diff = std::abs(formula - o.area);
      return Outcome{diff <= std::max(kOracleFloor, kOracleErrorFactor * o.est_error), diff};
    });
  }
  return report;
}

}  // namespace dstrig::oracle
