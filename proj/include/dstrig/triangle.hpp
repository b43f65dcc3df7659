#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "dstrig/geodesics.hpp"

namespace dstrig {

enum class TriangleKind { ProperDeSitter, Hyperbolic, AntipodalHyperbolic, Strange, Impossible };

/// Names of proper de Sitter triangles, keyed by their counts of space-like,
/// time-like and light-like edges.
enum class ProperName {
  Spatiolateral,           // (3,0,0)
  Tempolateral,            // (0,3,0)
  Chorosceles,             // (2,1,0)
  Chronosceles,            // (1,2,0)
  Lucilateral,             // (0,0,3)
  Multiple,                // (1,1,1)
  PhotoscelesSpaceBase,    // (1,0,2)
  PhotoscelesTimeBase,     // (0,1,2)
  BimetricalChronosceles,  // (0,2,1)
  BimetricalChorosceles,   // (2,0,1)
  None,
};

std::string_view to_string(TriangleKind kind);
std::string_view to_string(ProperName name);
/// Inverse of to_string(ProperName); nullopt for unknown names.
std::optional<ProperName> proper_name_from_string(std::string_view name);

/// True for the four types without light-like edges.
bool has_non_null_edges(ProperName name);

struct EdgeCounts {
  int space_like = 0;
  int time_like = 0;
  int light_like = 0;

  friend bool operator==(const EdgeCounts&, const EdgeCounts&) = default;
};

ProperName proper_name_for(const EdgeCounts& counts);

struct TriangleClass {
  TriangleKind kind = TriangleKind::Impossible;
  EdgeCounts edge_counts;
  ProperName proper_name = ProperName::None;
  /// Set for spatiolateral triangles unless the edge-length sum sits on 2 pi.
  std::optional<bool> contractible;
};

/// A geodesic triangle on the de Sitter quadric with non-null edges, together
/// with its unit tangents and unit outer normals. Vertex indices are 0-based;
/// edge j and normal j are opposite vertex j.
class DeSitterTriangle {
 public:
  const std::array<DeSitterPoint, 3>& vertices() const { return vertices_; }
  const DeSitterPoint& vertex(int j) const { return vertices_[j]; }
  const GeodesicSegment& edge(int j) const { return edges_[j]; }
  /// Unit tangent at vertex j pointing toward vertex k (j != k).
  const Vec3& tangent(int j, int k) const { return tangents_[j][k]; }
  const Vec3& normal(int j) const { return normals_[j]; }
  ProperName proper_name() const { return name_; }
  EdgeCounts edge_counts() const;

  /// <V_j^k, V_j^l> for the two tangents at vertex j.
  double tangent_product(int j) const;

  friend DeSitterTriangle build_triangle(const DeSitterPoint&, const DeSitterPoint&,
                                         const DeSitterPoint&);
  friend DeSitterTriangle with_flipped_normal(const DeSitterTriangle&, int);

 private:
  DeSitterTriangle(std::array<DeSitterPoint, 3> vertices, std::array<GeodesicSegment, 3> edges);

  std::array<DeSitterPoint, 3> vertices_;
  std::array<GeodesicSegment, 3> edges_;
  std::array<std::array<Vec3, 3>, 3> tangents_{};
  std::array<Vec3, 3> normals_{};
  ProperName name_ = ProperName::None;
};

/// The two vertex indices other than j, in increasing order.
constexpr std::array<int, 2> other_vertices(int j) {
  return j == 0 ? std::array<int, 2>{1, 2} : (j == 1 ? std::array<int, 2>{0, 2} : std::array<int, 2>{0, 1});
}

DeSitterTriangle build_triangle(const DeSitterPoint& p1, const DeSitterPoint& p2, const DeSitterPoint& p3);

/// Test hook: copy of tri with normal j negated, breaking the tangent/normal
/// product identity.
DeSitterTriangle with_flipped_normal(const DeSitterTriangle& tri, int j);

/// Classification straight from inner products; also accepts null-edge and
/// impossible triples.
TriangleClass classify_triangle(const DeSitterPoint& p1, const DeSitterPoint& p2, const DeSitterPoint& p3);

bool is_contractible(const DeSitterTriangle& tri);

/// For spatiolateral triangles: whether every edge is shorter than the sum
/// of the other two. Diagnostic only.
bool satisfies_triangle_inequality(const DeSitterTriangle& tri);

enum class PolarVertexTag { OnDeSitter, OnH2, OnAntiH2 };
std::string_view to_string(PolarVertexTag tag);

struct PolarTriangle {
  std::array<Vec3, 3> vertices;
  std::array<PolarVertexTag, 3> tags;
  /// Hyperbolic / AntipodalHyperbolic / ProperDeSitter when all vertices share
  /// one quadric sheet, Strange otherwise.
  TriangleKind kind;
};

PolarTriangle polar_triangle(const DeSitterTriangle& tri);
/// Throws NoPolarTriangle for the six null-edge types.
PolarTriangle polar_triangle(const DeSitterPoint& p1, const DeSitterPoint& p2, const DeSitterPoint& p3);

/// Vertices whose two adjacent outer normals are time-like and share a time cone.
std::vector<int> same_cone_normal_vertices(const DeSitterTriangle& tri);

/// The vertex each area formula singles out: same-cone normals for a
/// contractible spatiolateral, tangents in different cones for a
/// tempolateral, and the vertex opposite the odd edge for chorosceles and
/// chronosceles.
int distinguished_vertex(const DeSitterTriangle& tri);

/// Triple product det[p1,p2,p3] relative to the product of Euclidean norms.
double relative_volume(const Vec3& p1, const Vec3& p2, const Vec3& p3);

}  // namespace dstrig
