// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dstrig/cli.hpp"
#include "dstrig/verify.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace dstrig;

namespace {

constexpr std::array<ProperName, 4> kSupported{ProperName::Spatiolateral, ProperName::Tempolateral,
                                               ProperName::Chorosceles, ProperName::Chronosceles};

int failed_criteria = 0;

void verdict(int number, const std::string& title, bool pass, const std::string& summary) {
  std::printf("%s %d %s: %s\n", pass ? "PASS" : "FAIL", number, title.c_str(), summary.c_str());
  if (!pass) ++failed_criteria;
}

void detail(const std::string& line) { std::printf("       %s\n", line.c_str()); }

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string name(ProperName p) { return std::string(to_string(p)); }

// 250 seeded triangles of each supported type.
std::vector<DeSitterTriangle> mixed_pool(std::uint64_t seed) {
  std::vector<DeSitterTriangle> pool;
  for (ProperName t : kSupported) {
    oracle::TriangleGenerator g({seed, t});
    for (int i = 0; i < 250; ++i) pool.push_back(g.next());
  }
  return pool;
}

double signed_angle_sum(const AreaResult& r) {
  const auto& th = r.angles.theta;
  const double d = th[r.relabeling[0]], k = th[r.relabeling[1]], l = th[r.relabeling[2]];
  switch (r.formula_used) {
    case AreaFormula::ContractibleSpatiolateral: return -d + k + l;
    case AreaFormula::Tempolateral: return d - k - l;
    case AreaFormula::Chorosceles: return d + k + l;
    case AreaFormula::Chronosceles: return -d + k + l;
  }
  return std::nan("");
}

void formula_vs_oracle() {
  oracle::VerifyOptions options;
  options.grid = 64;
  options.u_max = 2.0;
  bool pass = true;
  std::string summary;
  std::vector<std::string> lines;
  for (ProperName t : kSupported) {
    const oracle::VerifyReport r = oracle::verify_type(t, 100, 7, options);
    const oracle::InvariantTally* tally = r.find("oracle_agreement");
    const int agreed = tally ? tally->passed : 0;
    // Only oracle non-convergence may account for a miss.
    const int unexplained = 100 - agreed - r.oracle_nonconvergent;
    pass = pass && agreed >= 99 && unexplained == 0;
    summary += (summary.empty() ? "" : ", ") + name(t) + " " + std::to_string(agreed) + "/100";
    lines.push_back(name(t) + ": worst |formula - oracle| " + sci(tally ? tally->worst : 0) + ", non-convergent " +
                    std::to_string(r.oracle_nonconvergent));
    for (const auto& f : r.failures) {
      if (f.find("oracle_agreement") != std::string::npos) lines.push_back(name(t) + " " + f);
    }
  }
  verdict(1, "formula vs oracle", pass, summary);
  for (const auto& l : lines) detail(l);
}

void product_identity() {
  std::mt19937_64 rng(101);
  std::map<ProperName, int> mix;
  double worst = 0;
  int built = 0;
  while (built < 1000) {
    const DeSitterPoint a(gen::unit_space_like(rng)), b(gen::unit_space_like(rng)), c(gen::unit_space_like(rng));
    std::optional<DeSitterTriangle> tri;
    try {
      tri = build_triangle(a, b, c);
    } catch (const Error&) {
      continue;
    }
    ++built;
    ++mix[tri->proper_name()];
    for (int j = 0; j < 3; ++j) {
      const auto [k, l] = other_vertices(j);
      worst = std::max(worst, std::abs(tri->tangent_product(j) - mink_inner(tri->normal(k), tri->normal(l))));
    }
  }
  verdict(2, "tangent/normal product identity", worst <= 1e-8,
          "max residual " + sci(worst) + " over 1000 buildable triangles (bound 1e-8)");
  std::string m;
  for (const auto& [t, n] : mix) m += name(t) + " " + std::to_string(n) + "  ";
  detail(m);
}

void complex_area_shape(const std::vector<DeSitterTriangle>& pool) {
  double worst_re = 0, worst_match = 0;
  int non_positive = 0;
  for (const auto& tri : pool) {
    const Complex z = complex_area(tri);
    const AreaResult r = girard_area(tri);
    worst_re = std::max(worst_re, std::abs(z.real()));
    worst_match = std::max(worst_match, std::abs(z.imag() - signed_angle_sum(r)));
    if (!(z.imag() > 0)) ++non_positive;
  }
  const bool pass = worst_re <= 1e-8 && worst_match <= 1e-8 && non_positive == 0;
  verdict(3, "complex area shape", pass,
          "max |Re| " + sci(worst_re) + ", max |Im - signed angle sum| " + sci(worst_match) + ", Im <= 0 on " +
              std::to_string(non_positive) + "/" + std::to_string(pool.size()));
}

void product_form(const std::vector<DeSitterTriangle>& pool) {
  double worst = 0;
  for (const auto& tri : pool) {
    worst = std::max(worst, std::abs(girard_area_from_products(tri) - girard_area(tri).real_area));
  }
  verdict(4, "product-form areas", worst <= 1e-9,
          "max |from products - from angles| " + sci(worst) + " over " + std::to_string(pool.size()) +
              " triangles (bound 1e-9)");
}

void tempolateral_inequality() {
  oracle::TriangleGenerator g({7, ProperName::Tempolateral});
  int held = 0;
  double smallest = INFINITY;
  for (int i = 0; i < 100; ++i) {
    const AreaResult r = girard_area(g.next());
    const auto& th = r.angles.theta;
    const double margin = th[r.relabeling[0]] - th[r.relabeling[1]] - th[r.relabeling[2]];
    smallest = std::min(smallest, margin);
    held += margin > 0;
  }
  verdict(5, "tempolateral angle inequality", held == 100,
          std::to_string(held) + "/100, smallest margin " + sci(smallest));
}

void spatiolateral_structure() {
  oracle::TriangleGenerator g({7, ProperName::Spatiolateral});
  int unique = 0, non_contractible = 0, exit4 = 0;
  for (int i = 0; i < 100; ++i) {
    const auto p = g.next_vertices();
    const DeSitterTriangle tri = build_triangle(p[0], p[1], p[2]);
    const auto same = same_cone_normal_vertices(tri);
    if (same.size() != 1) continue;
    ++unique;
    std::array<DeSitterPoint, 3> q = p;
    q[same[0]] = q[same[0]].antipode();
    if (classify_triangle(q[0], q[1], q[2]).contractible == false) ++non_contractible;
    std::istringstream in(cli::to_json({{q[0].vec(), q[1].vec(), q[2].vec()}, std::nullopt, std::nullopt}).dump());
    std::ostringstream out, err;
    if (cli::run_area(in, out, err, {}) == cli::kNonContractible) ++exit4;
  }
  const bool pass = unique == 100 && non_contractible == 100 && exit4 == 100;
  verdict(6, "spatiolateral structure", pass,
          "one same-cone vertex " + std::to_string(unique) + "/100, flipped non-contractible " +
              std::to_string(non_contractible) + "/100, area exit 4 " + std::to_string(exit4) + "/100");
}

void pseudo_angle_consistency() {
  std::mt19937_64 rng(707);
  std::map<PseudoAngleBranch, int> seen;
  double worst = 0;
  int pairs = 0;
  while (pairs < 10000) {
    const int kind = pairs % 3;
    const Vec3 u = kind == 2 ? gen::unit_time_like(rng) : gen::unit_space_like(rng);
    const Vec3 v = kind == 0 ? gen::unit_space_like(rng) : gen::unit_time_like(rng);
    const double c = mink_inner(u, v);
    if (kind != 1 && std::abs(std::abs(c) - 1) <= kNullBand) continue;
    const auto phi = pseudo_angle(u, v);
    ++seen[phi.branch];
    const Complex expected = c / (pseudo_norm(u) * pseudo_norm(v));
    worst = std::max(worst, std::abs(complex_cos(phi.value) - expected));
    ++pairs;
  }
  const bool pass = worst <= 1e-9 && seen.size() == 6;
  verdict(7, "pseudo-angle cosine consistency", pass,
          "max |cos phi - <u,v>/(|u||v|)| " + sci(worst) + " over 10000 pairs, " + std::to_string(seen.size()) +
              "/6 branches");
  std::string b;
  for (const auto& [branch, n] : seen) b += std::string(to_string(branch)) + " " + std::to_string(n) + "  ";
  detail(b);
}

void lorentz_invariance() {
  std::mt19937_64 rng(808);
  bool labels = true;
  double worst = 0;
  for (const auto& f : fixtures::all()) {
    const DeSitterTriangle base = fixtures::build(f);
    const TriangleClass base_cls = classify_triangle(f.p[0], f.p[1], f.p[2]);
    const AreaResult base_area = girard_area(base);
    for (int i = 0; i < 10; ++i) {
      const auto m = gen::lorentz_map(rng);
      std::array<DeSitterPoint, 3> q = f.p;
      for (auto& v : q) v = project_to_quadric(m * v.vec());
      const TriangleClass cls = classify_triangle(q[0], q[1], q[2]);
      const AreaResult area = girard_area(build_triangle(q[0], q[1], q[2]));
      labels = labels && cls.kind == base_cls.kind && cls.edge_counts == base_cls.edge_counts &&
               cls.proper_name == base_cls.proper_name && cls.contractible == base_cls.contractible &&
               area.formula_used == base_area.formula_used &&
               area.distinguished_vertex == base_area.distinguished_vertex;
      worst = std::max(worst, std::abs(area.real_area - base_area.real_area));
    }
  }
  verdict(8, "Lorentz invariance", labels && worst <= 1e-8,
          std::string("labels ") + (labels ? "identical" : "differ") + " over 40 maps, max area change " +
              sci(worst) + " (bound 1e-8)");
}

void oracle_convergence() {
  oracle::IntegrationOptions strict;
  strict.max_extra_refinements = 0;
  bool pass = true;
  std::vector<std::string> lines;
  for (const auto& f : fixtures::all()) {
    const DeSitterTriangle tri = fixtures::build(f);
    std::string line = std::string(f.name) + ":";
    double previous = 0;
    for (int n = 16; n <= 128; n *= 2) {
      double est = 0;
      try {
        est = oracle::integrate_area(tri, n, strict).est_error;
      } catch (const Error& e) {
        line += " n=" + std::to_string(n) + " " + e.what();
        pass = false;
        break;
      }
      line += " n=" + std::to_string(n) + " " + sci(est);
      if (n > 16) {
        const double ratio = previous / est;
        line += " (x" + sci(ratio) + ")";
        pass = pass && ratio >= 2;
      }
      previous = est;
    }
    lines.push_back(line);
  }
  verdict(9, "oracle convergence", pass, "est_error shrinks at least 2x per doubling, n = 16..128");
  for (const auto& l : lines) detail(l);
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<DeSitterTriangle> pool = mixed_pool(11);

  const auto guarded = [](int number, const char* title, auto fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      verdict(number, title, false, std::string("threw: ") + e.what());
    }
  };
  guarded(1, "formula vs oracle", formula_vs_oracle);
  guarded(2, "tangent/normal product identity", product_identity);
  guarded(3, "complex area shape", [&] { complex_area_shape(pool); });
  guarded(4, "product-form areas", [&] { product_form(pool); });
  guarded(5, "tempolateral angle inequality", tempolateral_inequality);
  guarded(6, "spatiolateral structure", spatiolateral_structure);
  guarded(7, "pseudo-angle cosine consistency", pseudo_angle_consistency);
  guarded(8, "Lorentz invariance", lorentz_invariance);
  guarded(9, "oracle convergence", oracle_convergence);

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 9 criteria failed (%.1f s)\n", failed_criteria, seconds);
  return failed_criteria;
}
