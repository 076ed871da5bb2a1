#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "kconvex/geom.hpp"

namespace kconvex {

/// Drawing instructions: polygons with a style class, overlay lines
/// (rendered clipped to the viewport), segments, and labeled points. The
/// viewport autoscales to the polygons plus a margin. Rendering rounds to 6
/// decimals; analysis never reads these coordinates back.
struct RenderSpec {
  struct StyledPolygon {
    Polygon polygon;
    std::string css_class = "poly";
  };
  struct LabeledPoint {
    Point point;
    std::string label;
  };
  std::vector<StyledPolygon> polygons;
  std::vector<Line> lines;
  std::vector<Segment> segments;
  std::vector<LabeledPoint> points;
};

namespace detail {

/// Fixed 6-decimal rendering of an exact rational (round half away from
/// zero); deterministic, no floating point involved.
inline std::string svg_coord(const Rational& r) {
  Int scaled_num = numerator(r) * 2000000 + denominator(r) * (r < 0 ? -1 : 1);
  Int scaled = scaled_num / (denominator(r) * 2);
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::ostringstream os;
  os << scaled;
  std::string digits = os.str();
  if (digits.size() <= 6) digits.insert(0, 7 - digits.size(), '0');
  digits.insert(digits.size() - 6, ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return (neg && digits != "0") ? "-" + digits : digits;
}

inline std::string svg_point(const Point& p) {
  // SVG y grows downward; flip so drawings match the analysis plane.
  return svg_coord(p.x) + "," + svg_coord(-p.y);
}

}  // namespace detail

/// Deterministic standalone SVG 1.1 document for the spec: identical input
/// produces identical bytes.
inline std::string render_svg(const RenderSpec& spec) {
  Point lo{0, 0}, hi{1, 1};
  bool first = true;
  for (const auto& sp : spec.polygons)
    for (const Point& p : sp.polygon.vertices) {
      if (first) {
        lo = hi = p;
        first = false;
      }
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
  for (const auto& lp : spec.points) {
    if (first) {
      lo = hi = lp.point;
      first = false;
    }
    lo = {std::min(lo.x, lp.point.x), std::min(lo.y, lp.point.y)};
    hi = {std::max(hi.x, lp.point.x), std::max(hi.y, lp.point.y)};
  }
  Rational margin = std::max(hi.x - lo.x, hi.y - lo.y) / 10 + 1;
  lo = {lo.x - margin, lo.y - margin};
  hi = {hi.x + margin, hi.y + margin};

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << detail::svg_coord(lo.x) << " " << detail::svg_coord(-hi.y) << " "
      << detail::svg_coord(hi.x - lo.x) << " " << detail::svg_coord(hi.y - lo.y)
      << "\">\n"
      << "<style>.poly{fill:#cfe2ff;stroke:#1f3c88;stroke-width:0.2}"
         ".alt{fill:#ffe4c4;stroke:#884a1f;stroke-width:0.2}"
         ".overlay{stroke:#c22;stroke-width:0.15}"
         "text{font-size:1.2px;font-family:monospace}</style>\n";
  for (const auto& sp : spec.polygons) {
    out << "<polygon class=\"" << sp.css_class << "\" points=\"";
    for (std::size_t i = 0; i < sp.polygon.size(); ++i)
      out << (i ? " " : "") << detail::svg_point(sp.polygon.vertices[i]);
    out << "\"/>\n";
  }
  for (const Line& line : spec.lines) {
    // Span the whole viewport along the line; the viewBox clips it.
    Rational reach = 2 * (hi.x - lo.x + hi.y - lo.y);
    Point d = line.dir.vec();
    Rational len2 = dot(d, d);
    out << "<line class=\"overlay\" x1=\"" << detail::svg_coord(line.anchor.x - reach * d.x / len2)
        << "\" y1=\"" << detail::svg_coord(-(line.anchor.y - reach * d.y / len2))
        << "\" x2=\"" << detail::svg_coord(line.anchor.x + reach * d.x / len2)
        << "\" y2=\"" << detail::svg_coord(-(line.anchor.y + reach * d.y / len2)) << "\"/>\n";
  }
  for (const Segment& seg : spec.segments)
    out << "<line class=\"overlay\" x1=\"" << detail::svg_coord(seg.a.x) << "\" y1=\""
        << detail::svg_coord(-seg.a.y) << "\" x2=\"" << detail::svg_coord(seg.b.x)
        << "\" y2=\"" << detail::svg_coord(-seg.b.y) << "\"/>\n";
  for (const auto& lp : spec.points) {
    out << "<circle cx=\"" << detail::svg_coord(lp.point.x) << "\" cy=\""
        << detail::svg_coord(-lp.point.y) << "\" r=\"0.3\" fill=\"#c22\"/>\n";
    if (!lp.label.empty())
      out << "<text x=\"" << detail::svg_coord(lp.point.x + Rational(1, 2)) << "\" y=\""
          << detail::svg_coord(-lp.point.y) << "\">" << lp.label << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace kconvex
