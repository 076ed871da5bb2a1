#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "kconvex/rational.hpp"

namespace kconvex {

struct Point {
  Rational x, y;
  bool operator==(const Point&) const = default;
  bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

inline Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

enum class Orientation { Right = -1, Collinear = 0, Left = 1 };

/// Sign of the cross product (q - p) x (r - p). Exact.
inline Orientation orientation(const Point& p, const Point& q, const Point& r) {
  return static_cast<Orientation>(sign(cross(q - p, r - p)));
}

/// Nonzero vector in canonical form: lowest integer terms with the first
/// nonzero coordinate positive, so parallel directions compare equal.
struct Direction {
  Rational dx, dy;

  Direction(Rational dx_, Rational dy_) : dx(std::move(dx_)), dy(std::move(dy_)) {
    if (dx == 0 && dy == 0) throw std::invalid_argument("zero direction");
    Int d = denominator(dx) * denominator(dy);
    Int nx = numerator(dx) * denominator(dy);
    Int ny = numerator(dy) * denominator(dx);
    Int g = gcd(nx < 0 ? Int(-nx) : nx, ny < 0 ? Int(-ny) : ny);
    nx /= g;
    ny /= g;
    if (nx < 0 || (nx == 0 && ny < 0)) {
      nx = -nx;
      ny = -ny;
    }
    dx = Rational(nx);
    dy = Rational(ny);
  }

  Point vec() const { return {dx, dy}; }
  Direction perp() const { return Direction(-dy, dx); }
  bool vertical() const { return dx == 0; }
  bool operator==(const Direction&) const = default;
};

inline Direction direction_between(const Point& from, const Point& to) {
  return Direction(to.x - from.x, to.y - from.y);
}

/// Line through `anchor` with direction `dir`; points are ordered along the
/// line by the parameter t of anchor + t*dir.
struct Line {
  Point anchor;
  Direction dir;

  /// Signed side of p: positive when p is to the left of the direction.
  Rational side(const Point& p) const { return cross(dir.vec(), p - anchor); }

  bool contains(const Point& p) const { return side(p) == 0; }

  /// Parameter of the orthogonal projection of p; for on-line points this is
  /// the exact line parameter.
  Rational param(const Point& p) const {
    return dot(p - anchor, dir.vec()) / dot(dir.vec(), dir.vec());
  }

  Point at(const Rational& t) const { return anchor + t * dir.vec(); }

  /// (A, B, C) with A*x + B*y + C = 0, integer, coprime, leading
  /// coefficient positive. Equal lines yield equal triples.
  std::array<Int, 3> canonical() const {
    // Normal is (-dy, dx); dir is already in lowest integer terms.
    Int a = -numerator(dir.dy);
    Int b = numerator(dir.dx);
    Rational c_rat = -(Rational(a) * anchor.x + Rational(b) * anchor.y);
    Int den = denominator(c_rat);
    a *= den;
    b *= den;
    Int c = numerator(c_rat);
    Int g = gcd(gcd(a < 0 ? Int(-a) : a, b < 0 ? Int(-b) : b), c < 0 ? Int(-c) : c);
    a /= g;
    b /= g;
    c /= g;
    if (a < 0 || (a == 0 && b < 0)) {
      a = -a;
      b = -b;
      c = -c;
    }
    return {a, b, c};
  }
};

inline Line line_through(const Point& p, const Point& q) {
  return Line{p, direction_between(p, q)};
}

struct Segment {
  Point a, b;
};

/// Oriented ray; `dir` is a raw vector (not a canonicalized Direction) so
/// the sense of the ray is preserved.
struct Ray {
  Point origin;
  Point dir;

  Point at(const Rational& t) const { return origin + t * dir; }
  Line line() const { return Line{origin, Direction(dir.x, dir.y)}; }
};

// --- segment intersection -------------------------------------------------

inline bool point_on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != Orientation::Collinear) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

/// True when closed segments ab and cd share at least one point.
inline bool segments_intersect(const Point& a, const Point& b, const Point& c,
                               const Point& d) {
  int o1 = sign(cross(b - a, c - a));
  int o2 = sign(cross(b - a, d - a));
  int o3 = sign(cross(d - c, a - c));
  int o4 = sign(cross(d - c, b - c));
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && point_on_segment(c, a, b)) return true;
  if (o2 == 0 && point_on_segment(d, a, b)) return true;
  if (o3 == 0 && point_on_segment(a, c, d)) return true;
  if (o4 == 0 && point_on_segment(b, c, d)) return true;
  return false;
}

/// Intersection point of two non-parallel lines.
inline std::optional<Point> line_intersection(const Line& l1, const Line& l2) {
  Rational den = cross(l1.dir.vec(), l2.dir.vec());
  if (den == 0) return std::nullopt;
  Rational t = cross(l2.anchor - l1.anchor, l2.dir.vec()) / den;
  return l1.at(t);
}

// --- polygon --------------------------------------------------------------

enum class PolygonErrorKind {
  TooFewVertices,
  DuplicateVertex,
  CollinearRun,
  SelfIntersection,
  DegenerateInput,
};

class PolygonError : public std::runtime_error {
 public:
  PolygonError(PolygonErrorKind kind, std::vector<std::size_t> indices,
               const std::string& what)
      : std::runtime_error(what), kind_(kind), indices_(std::move(indices)) {}
  PolygonErrorKind kind() const { return kind_; }
  const std::vector<std::size_t>& indices() const { return indices_; }

 private:
  PolygonErrorKind kind_;
  std::vector<std::size_t> indices_;
};

/// Simple polygon, vertices counterclockwise, no repeated vertices and no
/// three consecutive collinear vertices. Construct via validate_polygon.
struct Polygon {
  std::vector<Point> vertices;

  std::size_t size() const { return vertices.size(); }
  const Point& vertex(std::size_t i) const { return vertices[i % vertices.size()]; }
  std::size_t next(std::size_t i) const { return (i + 1) % vertices.size(); }
  std::size_t prev(std::size_t i) const { return (i + vertices.size() - 1) % vertices.size(); }

  Rational signed_area2() const {
    Rational s = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      s += cross(vertices[i], vertex(i + 1));
    return s;
  }

  Rational area() const { return signed_area2() / 2; }

  std::pair<Point, Point> bounding_box() const {
    Point lo = vertices[0], hi = vertices[0];
    for (const Point& p : vertices) {
      lo.x = std::min(lo.x, p.x);
      lo.y = std::min(lo.y, p.y);
      hi.x = std::max(hi.x, p.x);
      hi.y = std::max(hi.y, p.y);
    }
    return {lo, hi};
  }
};

/// Validates and orientation-normalizes a vertex list. Reverses clockwise
/// input; throws PolygonError naming the offending indices otherwise.
inline Polygon validate_polygon(std::vector<Point> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3)
    throw PolygonError(PolygonErrorKind::TooFewVertices, {},
                       "polygon needs at least 3 vertices, got " + std::to_string(n));
  {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return vertices[a] < vertices[b]; });
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (vertices[idx[i]] == vertices[idx[i + 1]])
        throw PolygonError(PolygonErrorKind::DuplicateVertex, {idx[i], idx[i + 1]},
                           "duplicate vertices at indices " + std::to_string(idx[i]) +
                               " and " + std::to_string(idx[i + 1]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n, k = (i + 2) % n;
    if (orientation(vertices[i], vertices[j], vertices[k]) == Orientation::Collinear)
      throw PolygonError(PolygonErrorKind::CollinearRun, {i, j, k},
                         "collinear run at indices " + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Skip adjacent edges (they share exactly one vertex, which the
      // duplicate and collinear checks above keep honest).
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_intersect(vertices[i], vertices[(i + 1) % n], vertices[j],
                             vertices[(j + 1) % n]))
        throw PolygonError(PolygonErrorKind::SelfIntersection, {i, j},
                           "edges " + std::to_string(i) + " and " + std::to_string(j) +
                               " intersect");
    }
  }
  Polygon p{std::move(vertices)};
  if (p.signed_area2() < 0) std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

/// Indices of the extreme points in CCW hull order; collinear points on hull
/// edges are excluded. Throws DegenerateInput when all points are collinear.
inline std::vector<std::size_t> convex_hull(const std::vector<Point>& points) {
  const std::size_t n = points.size();
  if (n < 3)
    throw PolygonError(PolygonErrorKind::DegenerateInput, {}, "hull needs >= 3 points");
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  idx.erase(std::unique(idx.begin(), idx.end(),
                        [&](std::size_t a, std::size_t b) { return points[a] == points[b]; }),
            idx.end());
  if (idx.size() < 3)
    throw PolygonError(PolygonErrorKind::DegenerateInput, {}, "fewer than 3 distinct points");
  auto build = [&](auto begin, auto end) {
    std::vector<std::size_t> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             orientation(points[chain[chain.size() - 2]], points[chain.back()],
                         points[*it]) != Orientation::Left)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<std::size_t> lower = build(idx.begin(), idx.end());
  std::vector<std::size_t> upper = build(idx.rbegin(), idx.rend());
  lower.insert(lower.end(), upper.begin() + 1, upper.end() - 1);
  if (lower.size() < 3)
    throw PolygonError(PolygonErrorKind::DegenerateInput, {}, "all points collinear");
  return lower;
}

enum class PointLocation { Outside = -1, Boundary = 0, Inside = 1 };

/// Exact point location by crossing parity, boundary detected first.
inline PointLocation point_in_polygon(const Point& p, const Polygon& poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i)
    if (point_on_segment(p, poly.vertices[i], poly.vertex(i + 1)))
      return PointLocation::Boundary;
  // Horizontal ray to +x; the half-open edge rule avoids vertex double counts.
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly.vertices[i];
    const Point& b = poly.vertex(i + 1);
    if ((a.y > p.y) != (b.y > p.y)) {
      // x coordinate of the edge at height p.y, compared exactly.
      Rational t = (p.y - a.y) / (b.y - a.y);
      Rational xcross = a.x + t * (b.x - a.x);
      if (xcross > p.x) inside = !inside;
    }
  }
  return inside ? PointLocation::Inside : PointLocation::Outside;
}

enum class VertexKind { Convex, Reflex };

inline VertexKind vertex_kind(const Polygon& p, std::size_t i) {
  return orientation(p.vertex(p.prev(i)), p.vertices[i], p.vertex(i + 1)) ==
                 Orientation::Left
             ? VertexKind::Convex
             : VertexKind::Reflex;
}

}  // namespace kconvex
