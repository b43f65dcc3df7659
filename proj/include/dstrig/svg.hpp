#pragma once

#include <array>
#include <string>

#include "dstrig/geodesics.hpp"

namespace dstrig {

/// Orthographic view of a triangle on the (x1, x2) plane: the quadric's
/// waist circle plus the three geodesic edges sampled at `samples` points,
/// styled by causal type. Output is byte-stable for equal input. Throws
/// UnsupportedKind when an edge is null or impossible.
std::string render_svg(const std::array<DeSitterPoint, 3>& vertices, int samples = 64);

}  // namespace dstrig
