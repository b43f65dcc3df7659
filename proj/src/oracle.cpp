#include "dstrig/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <span>
#include <thread>
#include <vector>

namespace dstrig::oracle {

namespace {

// sin(t a) / sin(a) where cos(a) = c; a is imaginary for c > 1, where the
// ratio becomes sinh(t d) / sinh(d). Near c = 1 both reduce to a series in
// x = a^2.
double interpolation_weight(double t, double c) {
  double x = 0;
  if (c <= 1) {
    const double a = std::acos(c);
    x = a * a;
  } else {
    const double d = std::acosh(c);
    x = -d * d;
  }
  if (std::abs(x) < 1e-4) {
    const double t2 = t * t;
    return t * (1 + (1 - t2) * x / 6 + (3 * t2 * t2 - 10 * t2 + 7) * x * x / 360);
  }
  if (x > 0) {
    const double a = std::sqrt(x);
    return std::sin(t * a) / std::sin(a);
  }
  const double d = std::sqrt(-x);
  return std::sinh(t * d) / std::sinh(d);
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

constexpr double kAntipodalMargin = 1e-9;

}  // namespace

Vec3 chord_point(const Vec3& a, const Vec3& b, double t) {
  const double c = mink_inner(a, b);
  if (c <= -1 + kAntipodalMargin) {
    throw Error(ErrorCode::DegenerateFan, "fan ray has no geodesic: <a,b> = " + std::to_string(c));
  }
  return interpolation_weight(1 - t, c) * a + interpolation_weight(t, c) * b;
}

double fan_area(const Vec3& apex, const Vec3& b, const Vec3& c, int n, unsigned workers) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "grid size must be positive");
  const double cell = 1.0 / n;
  const double h = 1.0 / (4.0 * n);
  std::vector<double> values(static_cast<std::size_t>(n) * n);

  // Base points are spaced by s = 3 sigma^2 - 2 sigma^3, which crowds rows
  // toward both base endpoints. A ray from the apex to an endpoint can be
  // close to antipodal, and there the integrand in s grows like
  // 1/sqrt(s); ds/dsigma vanishing at the ends cancels that.
  const auto smoothstep = [](double x) { return x * x * (3 - 2 * x); };
  const auto row = [&](int i) {
    const double sigma = (i + 0.5) * cell;
    const Vec3 q = chord_point(b, c, smoothstep(sigma));
    const Vec3 q_plus = chord_point(b, c, smoothstep(sigma + h));
    const Vec3 q_minus = chord_point(b, c, smoothstep(sigma - h));
    for (int j = 0; j < n; ++j) {
      const double t = (j + 0.5) * cell;
      const Vec3 xs = (chord_point(apex, q_plus, t) - chord_point(apex, q_minus, t)) / (2 * h);
      const Vec3 xt = (chord_point(apex, q, t + h) - chord_point(apex, q, t - h)) / (2 * h);
      const double e = mink_inner(xs, xs);
      const double f = mink_inner(xs, xt);
      const double g = mink_inner(xt, xt);
      values[static_cast<std::size_t>(i) * n + j] = std::sqrt(std::abs(e * g - f * f));
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(n));
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) row(i);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int i = static_cast<int>(w); i < n; i += static_cast<int>(workers)) row(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return pairwise_sum(values) * cell * cell;
}

OracleResult integrate_fan(const Vec3& apex, const Vec3& b, const Vec3& c, int n,
                           const IntegrationOptions& options) {
  if (n < 8) throw Error(ErrorCode::InvalidArgument, "oracle grid must be at least 8");
  if (std::abs(relative_volume(apex, b, c)) <= 1e-9) {
    throw Error(ErrorCode::DegenerateFan, "apex lies on the geodesic of the opposite edge");
  }

  int level = n / 2;
  double coarse = fan_area(apex, b, c, level, options.workers);
  double mid = fan_area(apex, b, c, level * 2, options.workers);
  double fine = fan_area(apex, b, c, level * 4, options.workers);
  int levels = 3;
  for (int extra = 0;; ++extra) {
    const double prev_err = std::abs(mid - coarse) / 3;
    const double err = std::abs(fine - mid) / 3;
    const double noise = 1e-13 * std::max(1.0, std::abs(fine));
    if (err < prev_err || err <= noise) {
      return {fine, err, level * 4, level * 4, levels, 0};
    }
    if (extra >= options.max_extra_refinements) {
      throw Error(ErrorCode::NonConvergent, "error estimate " + std::to_string(err) +
                                                " did not shrink from " + std::to_string(prev_err));
    }
    level *= 2;
    coarse = mid;
    mid = fine;
    fine = fan_area(apex, b, c, level * 4, options.workers);
    ++levels;
  }
}

OracleResult integrate_area(const DeSitterTriangle& tri, int n, const IntegrationOptions& options) {
  std::vector<int> apexes;
  if (options.apex) {
    apexes.push_back(*options.apex);
  } else {
    const int d = distinguished_vertex(tri);
    apexes = {d, (d + 1) % 3, (d + 2) % 3};
  }
  for (std::size_t i = 0; i < apexes.size(); ++i) {
    const int a = apexes[i];
    const auto [k, l] = other_vertices(a);
    try {
      OracleResult r = integrate_fan(tri.vertex(a).vec(), tri.vertex(k).vec(), tri.vertex(l).vec(), n, options);
      r.apex = a;
      return r;
    } catch (const Error& e) {
      // A ray through an antipodal pair only rules out this apex.
      if (e.code() != ErrorCode::DegenerateFan || i + 1 == apexes.size()) throw;
    }
  }
  throw Error(ErrorCode::DegenerateFan, "no usable fan apex");
}

DeSitterPoint chart_point(double u, double psi) {
  return DeSitterPoint(Vec3(std::sinh(u), std::cosh(u) * std::cos(psi), std::cosh(u) * std::sin(psi)));
}

TriangleGenerator::TriangleGenerator(const GeneratorConfig& config) : config_(config), rng_(config.seed) {
  if (!(config.u_max > 0)) throw Error(ErrorCode::InvalidArgument, "u_max must be positive");
  if (config.max_attempts < 1) throw Error(ErrorCode::InvalidArgument, "max_attempts must be at least 1");
}

std::array<DeSitterPoint, 3> TriangleGenerator::next_vertices() {
  std::uniform_real_distribution<double> rapidity(-config_.u_max, config_.u_max);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  for (int attempt = 0; attempt < config_.max_attempts; ++attempt) {
    std::array<double, 6> draw;
    for (int i = 0; i < 3; ++i) {
      draw[2 * i] = rapidity(rng_);
      draw[2 * i + 1] = angle(rng_);
    }
    std::array<DeSitterPoint, 3> p{chart_point(draw[0], draw[1]), chart_point(draw[2], draw[3]),
                                   chart_point(draw[4], draw[5])};
    TriangleClass cls;
    try {
      cls = classify_triangle(p[0], p[1], p[2]);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DegenerateTriangle) continue;
      throw;
    }
    if (cls.kind != TriangleKind::ProperDeSitter || cls.proper_name != config_.target) continue;
    if (config_.target == ProperName::Spatiolateral && cls.contractible != true) continue;
    return p;
  }
  throw Error(ErrorCode::ExhaustedAttempts, "no " + std::string(to_string(config_.target)) + " triangle in " +
                                                std::to_string(config_.max_attempts) + " attempts");
}

DeSitterTriangle TriangleGenerator::next() {
  const auto p = next_vertices();
  return build_triangle(p[0], p[1], p[2]);
}

DeSitterTriangle random_triangle(const GeneratorConfig& config) { return TriangleGenerator(config).next(); }

}  // namespace dstrig::oracle
