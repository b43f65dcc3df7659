#pragma once

// Arithmetic in three-dimensional Minkowski space with signature (-,+,+).
// Component 0 is the time coordinate; future-pointing means x0 > 0.

#include <cmath>
#include <complex>
#include <numbers>
#include <string_view>

#include <Eigen/Dense>

#include "dstrig/error.hpp"

namespace dstrig {

template <typename Scalar>
using MinkVec3 = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
using LorentzMatrix = Eigen::Matrix<Scalar, 3, 3>;

using Vec3 = MinkVec3<double>;
using Complex = std::complex<double>;

/// Band half-width on <u,u> (causal type) and on |<p,q>| - 1 (spans, segments).
inline constexpr double kNullBand = 1e-9;
/// Allowed deviation of |<u,u>| from 1 for "unit" vectors and quadric points.
inline constexpr double kUnitTol = 1e-9;
/// Components below this are treated as zero.
inline constexpr double kZeroTol = 1e-12;

enum class CausalType { SpaceLike, TimeLike, Null };

constexpr std::string_view to_string(CausalType t) {
  switch (t) {
    case CausalType::SpaceLike: return "space-like";
    case CausalType::TimeLike: return "time-like";
    case CausalType::Null: return "null";
  }
  return "?";
}

/// Which row of the pseudo-angle table produced a value.
enum class PseudoAngleBranch {
  RealSector,      // theta in [0, pi]
  PiMinusImag,     // pi - i theta
  PureImag,        // i theta
  NegImag,         // -i theta
  PiPlusImag,      // pi + i theta
  HalfPiPlusImag,  // pi/2 + i theta
};

constexpr std::string_view to_string(PseudoAngleBranch b) {
  switch (b) {
    case PseudoAngleBranch::RealSector: return "real";
    case PseudoAngleBranch::PiMinusImag: return "pi-i*theta";
    case PseudoAngleBranch::PureImag: return "i*theta";
    case PseudoAngleBranch::NegImag: return "-i*theta";
    case PseudoAngleBranch::PiPlusImag: return "pi+i*theta";
    case PseudoAngleBranch::HalfPiPlusImag: return "pi/2+i*theta";
  }
  return "?";
}

template <typename Scalar>
struct PseudoAngle {
  std::complex<Scalar> value;
  PseudoAngleBranch branch;
};

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar mink_inner(const Eigen::MatrixBase<DerivedA>& u,
                                     const Eigen::MatrixBase<DerivedB>& v) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedA, 3);
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(DerivedB, 3);
  return -u(0) * v(0) + u(1) * v(1) + u(2) * v(2);
}

template <typename Derived>
typename Derived::Scalar mink_norm2(const Eigen::MatrixBase<Derived>& u) {
  return mink_inner(u, u);
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& u) {
  if (!u.allFinite()) throw Error(ErrorCode::NonFinite, "vector has a non-finite component");
}

template <typename Derived>
CausalType causal_type(const Eigen::MatrixBase<Derived>& u) {
  using Scalar = typename Derived::Scalar;
  require_finite(u);
  if (u.cwiseAbs().maxCoeff() <= Scalar(kZeroTol)) {
    throw Error(ErrorCode::ZeroVector, "causal type of the zero vector is undefined");
  }
  const Scalar n2 = mink_norm2(u);
  if (n2 > Scalar(kNullBand)) return CausalType::SpaceLike;
  if (n2 < -Scalar(kNullBand)) return CausalType::TimeLike;
  return CausalType::Null;
}

/// sqrt(<u,u>) taken on the principal branch: real for space-like, positive
/// imaginary for time-like, zero for null.
template <typename Derived>
std::complex<typename Derived::Scalar> pseudo_norm(const Eigen::MatrixBase<Derived>& u) {
  using Scalar = typename Derived::Scalar;
  require_finite(u);
  const Scalar n2 = mink_norm2(u);
  if (std::abs(n2) <= Scalar(kNullBand)) return {Scalar(0), Scalar(0)};
  const Scalar r = std::sqrt(std::abs(n2));
  return n2 > 0 ? std::complex<Scalar>(r, 0) : std::complex<Scalar>(0, r);
}

/// cos(a + bi) = cos a cosh b - i sin a sinh b.
template <typename Scalar>
std::complex<Scalar> complex_cos(std::complex<Scalar> z) {
  const Scalar a = z.real();
  const Scalar b = z.imag();
  return {std::cos(a) * std::cosh(b), -std::sin(a) * std::sinh(b)};
}

namespace detail {

template <typename Derived>
CausalType require_unit_nonnull(const Eigen::MatrixBase<Derived>& u) {
  using Scalar = typename Derived::Scalar;
  require_finite(u);
  const Scalar n2 = mink_norm2(u);
  if (std::abs(n2) <= Scalar(kNullBand)) throw Error(ErrorCode::NullInput, "null vector has no angle");
  if (std::abs(std::abs(n2) - Scalar(1)) > Scalar(kUnitTol)) {
    throw Error(ErrorCode::NotUnit, "vector is not unit: <u,u> = " + std::to_string(n2));
  }
  return n2 > 0 ? CausalType::SpaceLike : CausalType::TimeLike;
}

// Shared case analysis for the real and pseudo angle. Returns the signed
// real angle and the branch it belongs to.
template <typename DerivedA, typename DerivedB>
std::pair<typename DerivedA::Scalar, PseudoAngleBranch> classify_angle(
    const Eigen::MatrixBase<DerivedA>& u, const Eigen::MatrixBase<DerivedB>& v) {
  using Scalar = typename DerivedA::Scalar;
  const CausalType tu = require_unit_nonnull(u);
  const CausalType tv = require_unit_nonnull(v);
  const Scalar c = mink_inner(u, v);
  const Scalar band = Scalar(kNullBand);

  if (tu != tv) return {std::asinh(c), PseudoAngleBranch::HalfPiPlusImag};

  if (std::abs(std::abs(c) - Scalar(1)) <= band) {
    throw Error(ErrorCode::NullSpan, "span of the pair is null or degenerate: <u,v> = " + std::to_string(c));
  }
  if (tu == CausalType::SpaceLike) {
    if (std::abs(c) < Scalar(1)) return {std::acos(c), PseudoAngleBranch::RealSector};
    if (c > Scalar(1)) return {std::acosh(c), PseudoAngleBranch::PureImag};
    return {std::acosh(-c), PseudoAngleBranch::PiMinusImag};
  }
  // Two time-like unit vectors always satisfy |<u,v>| >= 1; the sign of the
  // product says whether they share a time cone.
  if (c < 0) return {std::acosh(-c), PseudoAngleBranch::NegImag};
  return {std::acosh(c), PseudoAngleBranch::PiPlusImag};
}

}  // namespace detail

/// Complex angle phi with cos(phi) = <u,v> / (|u|_p |v|_p), the branch being
/// fixed by the causal configuration of the pair.
template <typename DerivedA, typename DerivedB>
PseudoAngle<typename DerivedA::Scalar> pseudo_angle(const Eigen::MatrixBase<DerivedA>& u,
                                                    const Eigen::MatrixBase<DerivedB>& v) {
  using Scalar = typename DerivedA::Scalar;
  using C = std::complex<Scalar>;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const auto [theta, branch] = detail::classify_angle(u, v);
  switch (branch) {
    case PseudoAngleBranch::RealSector: return {C(theta, 0), branch};
    case PseudoAngleBranch::PiMinusImag: return {C(pi, -theta), branch};
    case PseudoAngleBranch::PureImag: return {C(0, theta), branch};
    case PseudoAngleBranch::NegImag: return {C(0, -theta), branch};
    case PseudoAngleBranch::PiPlusImag: return {C(pi, theta), branch};
    case PseudoAngleBranch::HalfPiPlusImag: return {C(pi / 2, theta), branch};
  }
  return {C(0, 0), branch};
}

/// Real angle between unit non-null vectors: arccos for a space-like span,
/// arccosh(+-<u,v>) for like-typed vectors spanning a time-like plane, and
/// arcsinh(<u,v>) (signed) for a mixed pair.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar real_angle(const Eigen::MatrixBase<DerivedA>& u,
                                     const Eigen::MatrixBase<DerivedB>& v) {
  return detail::classify_angle(u, v).first;
}

/// Inverse of the branch table: the real angle encoded in a pseudo-angle.
template <typename Scalar>
Scalar theta_from_pseudo_angle(const PseudoAngle<Scalar>& phi) {
  switch (phi.branch) {
    case PseudoAngleBranch::RealSector: return phi.value.real();
    case PseudoAngleBranch::PiMinusImag:
    case PseudoAngleBranch::NegImag: return -phi.value.imag();
    case PseudoAngleBranch::PureImag:
    case PseudoAngleBranch::PiPlusImag:
    case PseudoAngleBranch::HalfPiPlusImag: return phi.value.imag();
  }
  return Scalar(0);
}

/// Two time-like vectors share a time cone iff <u,v> < 0.
template <typename DerivedA, typename DerivedB>
bool same_time_cone(const Eigen::MatrixBase<DerivedA>& u, const Eigen::MatrixBase<DerivedB>& v) {
  if (causal_type(u) != CausalType::TimeLike || causal_type(v) != CausalType::TimeLike) {
    throw Error(ErrorCode::NotTimeLike, "time cones are only defined for time-like vectors");
  }
  return mink_inner(u, v) < 0;
}

/// Metric-adjoint of the Euclidean cross product, J (u x v); orthogonal to
/// both arguments under the Minkowski product. It satisfies
/// <a x b, c x d> = -(<a,c><b,d> - <a,d><b,c>).
template <typename DerivedA, typename DerivedB>
MinkVec3<typename DerivedA::Scalar> lorentz_cross(const Eigen::MatrixBase<DerivedA>& u,
                                                  const Eigen::MatrixBase<DerivedB>& v) {
  using Scalar = typename DerivedA::Scalar;
  require_finite(u);
  require_finite(v);
  MinkVec3<Scalar> w(u(2) * v(1) - u(1) * v(2), u(2) * v(0) - u(0) * v(2), u(0) * v(1) - u(1) * v(0));
  if (w.squaredNorm() < Scalar(kZeroTol) * Scalar(kZeroTol)) {
    throw Error(ErrorCode::DegeneratePair, "vectors are linearly dependent");
  }
  return w;
}

/// Scales a non-null vector to |<u,u>| = 1.
template <typename Derived>
MinkVec3<typename Derived::Scalar> mink_normalized(const Eigen::MatrixBase<Derived>& u) {
  using Scalar = typename Derived::Scalar;
  const Scalar n2 = mink_norm2(u);
  if (std::abs(n2) <= Scalar(kNullBand)) throw Error(ErrorCode::NullInput, "cannot normalize a null vector");
  return u / std::sqrt(std::abs(n2));
}

/// The diagonal metric diag(-1, 1, 1).
template <typename Scalar = double>
LorentzMatrix<Scalar> metric() {
  return MinkVec3<Scalar>(-1, 1, 1).asDiagonal();
}

/// Boost with the given rapidity along the spatial direction (cos a, sin a).
template <typename Scalar = double>
LorentzMatrix<Scalar> boost(Scalar rapidity, Scalar direction) {
  const Scalar ch = std::cosh(rapidity);
  const Scalar sh = std::sinh(rapidity);
  const Scalar dx = std::cos(direction);
  const Scalar dy = std::sin(direction);
  LorentzMatrix<Scalar> L;
  L << ch, sh * dx, sh * dy,
       sh * dx, 1 + (ch - 1) * dx * dx, (ch - 1) * dx * dy,
       sh * dy, (ch - 1) * dx * dy, 1 + (ch - 1) * dy * dy;
  return L;
}

/// Rotation of the space plane, leaving the time axis fixed.
template <typename Scalar = double>
LorentzMatrix<Scalar> spatial_rotation(Scalar angle) {
  LorentzMatrix<Scalar> R = LorentzMatrix<Scalar>::Identity();
  R(1, 1) = std::cos(angle);
  R(1, 2) = -std::sin(angle);
  R(2, 1) = std::sin(angle);
  R(2, 2) = std::cos(angle);
  return R;
}

}  // namespace dstrig
