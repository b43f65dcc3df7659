#pragma once

// Points and geodesic segments on the de Sitter quadric <p,p> = 1.

#include <cmath>
#include <string>
#include <string_view>

#include "dstrig/minkowski.hpp"

namespace dstrig {

/// A point on the unit de Sitter quadric. Construction checks the quadric
/// equation to within kUnitTol.
template <typename Scalar>
class BasicDeSitterPoint {
 public:
  explicit BasicDeSitterPoint(const MinkVec3<Scalar>& v) : v_(v) {
    require_finite(v_);
    const Scalar n2 = mink_norm2(v_);
    if (std::abs(n2 - Scalar(1)) > Scalar(kUnitTol)) {
      throw Error(ErrorCode::NotOnQuadric, "<v,v> = " + std::to_string(n2) + ", expected 1");
    }
  }

  const MinkVec3<Scalar>& vec() const { return v_; }
  Scalar operator[](int i) const { return v_(i); }

  BasicDeSitterPoint antipode() const { return BasicDeSitterPoint(-v_); }

 private:
  MinkVec3<Scalar> v_;
};

using DeSitterPoint = BasicDeSitterPoint<double>;

enum class SegmentKind { EllipsePart, HyperbolaPart, NullLine, Impossible };

constexpr std::string_view to_string(SegmentKind k) {
  switch (k) {
    case SegmentKind::EllipsePart: return "ellipse_part";
    case SegmentKind::HyperbolaPart: return "hyperbola_part";
    case SegmentKind::NullLine: return "null_line";
    case SegmentKind::Impossible: return "impossible";
  }
  return "?";
}

template <typename Scalar>
struct BasicGeodesicSegment {
  BasicDeSitterPoint<Scalar> a;
  BasicDeSitterPoint<Scalar> b;
  SegmentKind kind;
  /// arccos<a,b> for ellipse parts, arccosh<a,b> for hyperbola parts, else 0.
  Scalar separation;
};

using GeodesicSegment = BasicGeodesicSegment<double>;

template <typename Scalar>
bool coincident(const BasicDeSitterPoint<Scalar>& p, const BasicDeSitterPoint<Scalar>& q) {
  const Scalar scale = Scalar(1) + p.vec().cwiseAbs().maxCoeff();
  return (p.vec() - q.vec()).cwiseAbs().maxCoeff() <= Scalar(kUnitTol) * scale;
}

namespace detail {
template <typename Scalar>
void require_distinct(const BasicDeSitterPoint<Scalar>& p, const BasicDeSitterPoint<Scalar>& q) {
  if (coincident(p, q)) throw Error(ErrorCode::CoincidentPoints, "endpoints coincide");
}
}  // namespace detail

template <typename Derived>
BasicDeSitterPoint<typename Derived::Scalar> project_to_quadric(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  require_finite(v);
  const Scalar n2 = mink_norm2(v);
  if (n2 <= Scalar(kNullBand)) {
    throw Error(ErrorCode::NotSpaceLikePosition, "only space-like vectors project onto the quadric");
  }
  return BasicDeSitterPoint<Scalar>(v / std::sqrt(n2));
}

/// Unit tangent at p pointing toward q: w = q - <p,q> p, normalized.
template <typename Scalar>
MinkVec3<Scalar> tangent_toward(const BasicDeSitterPoint<Scalar>& p, const BasicDeSitterPoint<Scalar>& q) {
  detail::require_distinct(p, q);
  const Scalar c = mink_inner(p.vec(), q.vec());
  if (std::abs(std::abs(c) - Scalar(1)) <= Scalar(kNullBand)) {
    throw Error(ErrorCode::NullTangent, "tangent is light-like: <p,q> = " + std::to_string(c));
  }
  const MinkVec3<Scalar> w = q.vec() - c * p.vec();
  return w / std::sqrt(std::abs(mink_norm2(w)));
}

/// Causal type of the plane spanned by p and q.
template <typename Scalar>
CausalType classify_span(const BasicDeSitterPoint<Scalar>& p, const BasicDeSitterPoint<Scalar>& q) {
  detail::require_distinct(p, q);
  const Scalar a = std::abs(mink_inner(p.vec(), q.vec()));
  if (a < Scalar(1) - Scalar(kNullBand)) return CausalType::SpaceLike;
  if (a > Scalar(1) + Scalar(kNullBand)) return CausalType::TimeLike;
  return CausalType::Null;
}

/// Segment kind from <p,q>: ellipse part for |c| < 1, hyperbola part for
/// c > 1, null line at c = 1, no segment for c <= -1.
template <typename Scalar>
SegmentKind segment_kind(Scalar c) {
  const Scalar band = Scalar(kNullBand);
  if (std::abs(c - Scalar(1)) <= band) return SegmentKind::NullLine;
  if (c > Scalar(1)) return SegmentKind::HyperbolaPart;
  if (c < Scalar(-1) + band) return SegmentKind::Impossible;
  return SegmentKind::EllipsePart;
}

template <typename Scalar>
BasicGeodesicSegment<Scalar> classify_segment(const BasicDeSitterPoint<Scalar>& p,
                                              const BasicDeSitterPoint<Scalar>& q) {
  detail::require_distinct(p, q);
  const Scalar c = mink_inner(p.vec(), q.vec());
  const SegmentKind kind = segment_kind(c);
  Scalar separation = 0;
  if (kind == SegmentKind::EllipsePart) separation = std::acos(c);
  if (kind == SegmentKind::HyperbolaPart) separation = std::acosh(c);
  return {p, q, kind, separation};
}

/// Point at parameter t in [0,1] along an ellipse or hyperbola segment, by
/// sine (resp. sinh) interpolation of the endpoints.
template <typename Scalar>
BasicDeSitterPoint<Scalar> geodesic_point(const BasicGeodesicSegment<Scalar>& seg, Scalar t) {
  if (!(t >= 0 && t <= 1)) throw Error(ErrorCode::InvalidArgument, "t must lie in [0,1]");
  const Scalar s = seg.separation;
  Scalar wa = 0;
  Scalar wb = 0;
  switch (seg.kind) {
    case SegmentKind::EllipsePart:
      wa = std::sin((1 - t) * s) / std::sin(s);
      wb = std::sin(t * s) / std::sin(s);
      break;
    case SegmentKind::HyperbolaPart:
      wa = std::sinh((1 - t) * s) / std::sinh(s);
      wb = std::sinh(t * s) / std::sinh(s);
      break;
    default:
      throw Error(ErrorCode::UnsupportedKind,
                  "cannot trace a " + std::string(to_string(seg.kind)) + " segment");
  }
  if (t == 0) return seg.a;
  if (t == 1) return seg.b;
  return BasicDeSitterPoint<Scalar>(wa * seg.a.vec() + wb * seg.b.vec());
}

template <typename Scalar>
Scalar edge_length(const BasicGeodesicSegment<Scalar>& seg) {
  if (seg.kind != SegmentKind::EllipsePart && seg.kind != SegmentKind::HyperbolaPart) {
    throw Error(ErrorCode::UnsupportedKind,
                "length of a " + std::string(to_string(seg.kind)) + " segment is undefined");
  }
  return seg.separation;
}

}  // namespace dstrig
