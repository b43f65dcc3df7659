#pragma once

// Hand-rolled generators for property tests.

#include <cmath>
#include <numbers>
#include <random>

#include "dstrig/minkowski.hpp"

namespace dstrig::gen {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Unit space-like vector (a point of the de Sitter quadric).
inline Vec3 unit_space_like(std::mt19937_64& rng, double u_max = 2.0) {
  const double u = uniform(rng, -u_max, u_max);
  const double psi = uniform(rng, 0, 2 * std::numbers::pi);
  return {std::sinh(u), std::cosh(u) * std::cos(psi), std::cosh(u) * std::sin(psi)};
}

/// Unit time-like vector, future or past with equal probability.
inline Vec3 unit_time_like(std::mt19937_64& rng, double u_max = 2.0) {
  const double u = uniform(rng, 0, u_max);
  const double psi = uniform(rng, 0, 2 * std::numbers::pi);
  const double sign = uniform(rng, 0, 1) < 0.5 ? -1.0 : 1.0;
  return sign * Vec3(std::cosh(u), std::sinh(u) * std::cos(psi), std::sinh(u) * std::sin(psi));
}

inline Vec3 any_vector(std::mt19937_64& rng, double scale = 3.0) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

/// Orthochronous Lorentz map: boost composed with spatial rotations.
inline LorentzMatrix<double> lorentz_map(std::mt19937_64& rng, double max_rapidity = 1.5) {
  return spatial_rotation(uniform(rng, 0, 2 * std::numbers::pi)) *
         boost(uniform(rng, -max_rapidity, max_rapidity), uniform(rng, 0, 2 * std::numbers::pi)) *
         spatial_rotation(uniform(rng, 0, 2 * std::numbers::pi));
}

}  // namespace dstrig::gen
