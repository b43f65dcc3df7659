#include "dstrig/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace dstrig {

namespace {

constexpr double kCanvas = 600;
constexpr double kMargin = 40;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct View {
  double cx = 0;
  double cy = 0;
  double scale = 1;

  double x(double x1) const { return kCanvas / 2 + (x1 - cx) * scale; }
  // SVG y grows downward.
  double y(double x2) const { return kCanvas / 2 - (x2 - cy) * scale; }
};

}  // namespace

std::string render_svg(const std::array<DeSitterPoint, 3>& vertices, int samples) {
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 samples per edge");

  std::array<GeodesicSegment, 3> edges{classify_segment(vertices[1], vertices[2]),
                                       classify_segment(vertices[0], vertices[2]),
                                       classify_segment(vertices[0], vertices[1])};
  std::array<std::vector<Vec3>, 3> traces;
  double lo_x = -1, hi_x = 1, lo_y = -1, hi_y = 1;
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < samples; ++i) {
      const double t = static_cast<double>(i) / (samples - 1);
      const Vec3 p = geodesic_point(edges[j], t).vec();
      traces[j].push_back(p);
      lo_x = std::min(lo_x, p(1));
      hi_x = std::max(hi_x, p(1));
      lo_y = std::min(lo_y, p(2));
      hi_y = std::max(hi_y, p(2));
    }
  }

  View view;
  view.cx = (lo_x + hi_x) / 2;
  view.cy = (lo_y + hi_y) / 2;
  view.scale = (kCanvas - 2 * kMargin) / std::max(hi_x - lo_x, hi_y - lo_y);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  out += "  <rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  out += "  <circle class=\"waist\" cx=\"" + fmt(view.x(0)) + "\" cy=\"" + fmt(view.y(0)) + "\" r=\"" +
         fmt(view.scale) + "\" fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"4 4\"/>\n";

  for (int j = 0; j < 3; ++j) {
    const bool space_like = edges[j].kind == SegmentKind::EllipsePart;
    out += "  <polyline class=\"";
    out += space_like ? "space-like" : "time-like";
    out += "\" fill=\"none\" stroke-width=\"2\" ";
    out += space_like ? "stroke=\"#1f77b4\"" : "stroke=\"#d62728\" stroke-dasharray=\"8 4\"";
    out += " points=\"";
    for (std::size_t i = 0; i < traces[j].size(); ++i) {
      if (i) out += ' ';
      out += fmt(view.x(traces[j][i](1))) + "," + fmt(view.y(traces[j][i](2)));
    }
    out += "\"/>\n";
  }

  for (int j = 0; j < 3; ++j) {
    const double x = view.x(vertices[j][1]);
    const double y = view.y(vertices[j][2]);
    out += "  <circle class=\"vertex\" cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"4\" fill=\"black\"/>\n";
    out += "  <text x=\"" + fmt(x + 6) + "\" y=\"" + fmt(y - 6) +
           "\" font-family=\"sans-serif\" font-size=\"14\">p" + std::to_string(j + 1) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace dstrig
