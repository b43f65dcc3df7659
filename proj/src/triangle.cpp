#include "dstrig/triangle.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace dstrig {

namespace {

constexpr double kDegenerateVolume = 1e-9;
constexpr double kTwoPi = 2 * std::numbers::pi;

struct NameEntry {
  ProperName name;
  std::string_view text;
  EdgeCounts counts;
};

constexpr std::array<NameEntry, 10> kNames{{
    {ProperName::Spatiolateral, "spatiolateral", {3, 0, 0}},
    {ProperName::Tempolateral, "tempolateral", {0, 3, 0}},
    {ProperName::Chorosceles, "chorosceles", {2, 1, 0}},
    {ProperName::Chronosceles, "chronosceles", {1, 2, 0}},
    {ProperName::Lucilateral, "lucilateral", {0, 0, 3}},
    {ProperName::Multiple, "multiple", {1, 1, 1}},
    {ProperName::PhotoscelesSpaceBase, "photosceles_space_base", {1, 0, 2}},
    {ProperName::PhotoscelesTimeBase, "photosceles_time_base", {0, 1, 2}},
    {ProperName::BimetricalChronosceles, "bimetrical_chronosceles", {0, 2, 1}},
    {ProperName::BimetricalChorosceles, "bimetrical_chorosceles", {2, 0, 1}},
}};

void require_distinct_vertices(const DeSitterPoint& p1, const DeSitterPoint& p2, const DeSitterPoint& p3) {
  if (coincident(p1, p2) || coincident(p1, p3) || coincident(p2, p3)) {
    throw Error(ErrorCode::DegenerateTriangle, "two vertices coincide");
  }
  if (std::abs(relative_volume(p1.vec(), p2.vec(), p3.vec())) <= kDegenerateVolume) {
    throw Error(ErrorCode::DegenerateTriangle, "vertices lie on a single geodesic");
  }
}

void tally(EdgeCounts& counts, SegmentKind kind) {
  switch (kind) {
    case SegmentKind::EllipsePart: ++counts.space_like; break;
    case SegmentKind::HyperbolaPart: ++counts.time_like; break;
    case SegmentKind::NullLine: ++counts.light_like; break;
    case SegmentKind::Impossible: break;
  }
}

std::optional<bool> contractibility_from_length(double perimeter) {
  if (perimeter < kTwoPi - kNullBand) return true;
  if (perimeter > kTwoPi + kNullBand) return false;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(TriangleKind kind) {
  switch (kind) {
    case TriangleKind::ProperDeSitter: return "proper_de_sitter";
    case TriangleKind::Hyperbolic: return "hyperbolic";
    case TriangleKind::AntipodalHyperbolic: return "antipodal_hyperbolic";
    case TriangleKind::Strange: return "strange";
    case TriangleKind::Impossible: return "impossible";
  }
  return "?";
}

std::string_view to_string(ProperName name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.text;
  }
  return "none";
}

std::optional<ProperName> proper_name_from_string(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.text == name) return e.name;
  }
  return std::nullopt;
}

bool has_non_null_edges(ProperName name) {
  return name == ProperName::Spatiolateral || name == ProperName::Tempolateral ||
         name == ProperName::Chorosceles || name == ProperName::Chronosceles;
}

ProperName proper_name_for(const EdgeCounts& counts) {
  for (const auto& e : kNames) {
    if (e.counts == counts) return e.name;
  }
  return ProperName::None;
}

double relative_volume(const Vec3& p1, const Vec3& p2, const Vec3& p3) {
  Eigen::Matrix3d m;
  m << p1, p2, p3;
  return m.determinant() / (p1.norm() * p2.norm() * p3.norm());
}

DeSitterTriangle::DeSitterTriangle(std::array<DeSitterPoint, 3> vertices, std::array<GeodesicSegment, 3> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {}

EdgeCounts DeSitterTriangle::edge_counts() const {
  EdgeCounts counts;
  for (const auto& e : edges_) tally(counts, e.kind);
  return counts;
}

double DeSitterTriangle::tangent_product(int j) const {
  const auto [k, l] = other_vertices(j);
  return mink_inner(tangents_[j][k], tangents_[j][l]);
}

DeSitterTriangle build_triangle(const DeSitterPoint& p1, const DeSitterPoint& p2, const DeSitterPoint& p3) {
  require_distinct_vertices(p1, p2, p3);
  const std::array<DeSitterPoint, 3> p{p1, p2, p3};

  std::array<GeodesicSegment, 3> edges{classify_segment(p[1], p[2]), classify_segment(p[0], p[2]),
                                       classify_segment(p[0], p[1])};
  for (int j = 0; j < 3; ++j) {
    if (edges[j].kind == SegmentKind::Impossible) {
      throw Error(ErrorCode::ImpossibleEdge, "edge opposite vertex " + std::to_string(j + 1) + " is empty");
    }
    if (edges[j].kind == SegmentKind::NullLine) {
      throw Error(ErrorCode::NullEdge, "edge opposite vertex " + std::to_string(j + 1) + " is light-like");
    }
  }

  DeSitterTriangle tri(p, edges);
  for (int j = 0; j < 3; ++j) {
    for (int k : other_vertices(j)) tri.tangents_[j][k] = tangent_toward(p[j], p[k]);
  }

  // Cyclic cross products make <V_j^k, V_j^l> = <u_k, u_l> hold with one
  // common sign, so only a global orientation remains to fix.
  for (int j = 0; j < 3; ++j) {
    tri.normals_[j] = mink_normalized(lorentz_cross(p[(j + 1) % 3].vec(), p[(j + 2) % 3].vec()));
  }
  const double side = mink_inner(tri.normals_[0], p[0].vec());
  const bool flip = std::abs(side) > kZeroTol ? side > 0 : tri.normals_[0](0) < 0;
  if (flip) {
    for (auto& u : tri.normals_) u = -u;
  }

  tri.name_ = proper_name_for(tri.edge_counts());
  return tri;
}

DeSitterTriangle with_flipped_normal(const DeSitterTriangle& tri, int j) {
  DeSitterTriangle copy = tri;
  copy.normals_[j] = -copy.normals_[j];
  return copy;
}

TriangleClass classify_triangle(const DeSitterPoint& p1, const DeSitterPoint& p2, const DeSitterPoint& p3) {
  require_distinct_vertices(p1, p2, p3);
  const std::array<const DeSitterPoint*, 3> p{&p1, &p2, &p3};

  TriangleClass result;
  bool impossible = false;
  double perimeter = 0;
  for (int j = 0; j < 3; ++j) {
    const auto [k, l] = other_vertices(j);
    const GeodesicSegment seg = classify_segment(*p[k], *p[l]);
    if (seg.kind == SegmentKind::Impossible) impossible = true;
    tally(result.edge_counts, seg.kind);
    perimeter += seg.separation;
  }
  if (impossible) {
    result.kind = TriangleKind::Impossible;
    return result;
  }
  result.kind = TriangleKind::ProperDeSitter;
  result.proper_name = proper_name_for(result.edge_counts);
  if (result.proper_name == ProperName::Spatiolateral) {
    result.contractible = contractibility_from_length(perimeter);
  }
  return result;
}

bool is_contractible(const DeSitterTriangle& tri) {
  if (tri.proper_name() != ProperName::Spatiolateral) {
    throw Error(ErrorCode::NotSpatiolateral, "contractibility is defined for spatiolateral triangles only");
  }
  double perimeter = 0;
  for (int j = 0; j < 3; ++j) perimeter += edge_length(tri.edge(j));
  const auto c = contractibility_from_length(perimeter);
  if (!c) throw Error(ErrorCode::BoundaryCase, "edge lengths sum to 2 pi");
  return *c;
}

bool satisfies_triangle_inequality(const DeSitterTriangle& tri) {
  if (tri.proper_name() != ProperName::Spatiolateral) {
    throw Error(ErrorCode::NotSpatiolateral, "triangle inequality diagnostic needs a spatiolateral triangle");
  }
  const double a = edge_length(tri.edge(0));
  const double b = edge_length(tri.edge(1));
  const double c = edge_length(tri.edge(2));
  return a < b + c && b < a + c && c < a + b;
}

std::string_view to_string(PolarVertexTag tag) {
  switch (tag) {
    case PolarVertexTag::OnDeSitter: return "on_de_sitter";
    case PolarVertexTag::OnH2: return "on_h2";
    case PolarVertexTag::OnAntiH2: return "on_anti_h2";
  }
  return "?";
}

PolarTriangle polar_triangle(const DeSitterTriangle& tri) {
  PolarTriangle polar{};
  for (int j = 0; j < 3; ++j) {
    const Vec3& u = tri.normal(j);
    polar.vertices[j] = u;
    if (mink_norm2(u) > 0) {
      polar.tags[j] = PolarVertexTag::OnDeSitter;
    } else {
      polar.tags[j] = u(0) > 0 ? PolarVertexTag::OnH2 : PolarVertexTag::OnAntiH2;
    }
  }
  const auto all = [&](PolarVertexTag t) {
    return polar.tags[0] == t && polar.tags[1] == t && polar.tags[2] == t;
  };
  if (all(PolarVertexTag::OnH2)) {
    polar.kind = TriangleKind::Hyperbolic;
  } else if (all(PolarVertexTag::OnAntiH2)) {
    polar.kind = TriangleKind::AntipodalHyperbolic;
  } else if (all(PolarVertexTag::OnDeSitter)) {
    polar.kind = TriangleKind::ProperDeSitter;
  } else {
    polar.kind = TriangleKind::Strange;
  }
  return polar;
}

PolarTriangle polar_triangle(const DeSitterPoint& p1, const DeSitterPoint& p2, const DeSitterPoint& p3) {
  const TriangleClass cls = classify_triangle(p1, p2, p3);
  if (!has_non_null_edges(cls.proper_name)) {
    throw Error(ErrorCode::NoPolarTriangle,
                "no polar triangle for a " + std::string(to_string(cls.proper_name)) + " triangle");
  }
  return polar_triangle(build_triangle(p1, p2, p3));
}

std::vector<int> same_cone_normal_vertices(const DeSitterTriangle& tri) {
  std::vector<int> out;
  for (int j = 0; j < 3; ++j) {
    const auto [k, l] = other_vertices(j);
    const Vec3& uk = tri.normal(k);
    const Vec3& ul = tri.normal(l);
    if (causal_type(uk) == CausalType::TimeLike && causal_type(ul) == CausalType::TimeLike &&
        same_time_cone(uk, ul)) {
      out.push_back(j);
    }
  }
  return out;
}

int distinguished_vertex(const DeSitterTriangle& tri) {
  const auto unique = [](const std::vector<int>& candidates, const char* what) {
    if (candidates.size() != 1) {
      throw Error(ErrorCode::NotApplicable, std::string(what) + " found at " +
                                                std::to_string(candidates.size()) + " vertices, expected 1");
    }
    return candidates.front();
  };

  switch (tri.proper_name()) {
    case ProperName::Spatiolateral: {
      if (!is_contractible(tri)) {
        throw Error(ErrorCode::NonContractible, "non-contractible spatiolateral has no distinguished vertex");
      }
      return unique(same_cone_normal_vertices(tri), "same-cone normals");
    }
    case ProperName::Tempolateral: {
      std::vector<int> split;
      for (int j = 0; j < 3; ++j) {
        const auto [k, l] = other_vertices(j);
        if (!same_time_cone(tri.tangent(j, k), tri.tangent(j, l))) split.push_back(j);
      }
      return unique(split, "tangents in different time cones");
    }
    case ProperName::Chorosceles:
    case ProperName::Chronosceles: {
      const SegmentKind odd = tri.proper_name() == ProperName::Chorosceles ? SegmentKind::HyperbolaPart
                                                                          : SegmentKind::EllipsePart;
      std::vector<int> hits;
      for (int j = 0; j < 3; ++j) {
        if (tri.edge(j).kind == odd) hits.push_back(j);
      }
      return unique(hits, "odd edge");
    }
    default:
      throw Error(ErrorCode::NotApplicable, "no distinguished vertex for this triangle type");
  }
}

}  // namespace dstrig
