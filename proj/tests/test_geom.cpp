#include <catch2/catch_amalgamated.hpp>

#include "kconvex/geom.hpp"
#include "kconvex/stabbing.hpp"

using namespace kconvex;

namespace {

Polygon make(std::initializer_list<std::pair<long, long>> pts) {
  std::vector<Point> v;
  for (auto [x, y] : pts) v.push_back({Rational(x), Rational(y)});
  return validate_polygon(std::move(v));
}

const Polygon kSquare = make({{0, 0}, {1, 0}, {1, 1}, {0, 1}});

}  // namespace

TEST_CASE("orientation basics") {
  Point o{0, 0}, e1{1, 0}, e2{0, 1};
  CHECK(orientation(o, e1, e2) == Orientation::Left);
  CHECK(orientation(o, e2, e1) == Orientation::Right);
  CHECK(orientation(o, Point{1, 1}, Point{2, 2}) == Orientation::Collinear);
  // Points on y = x^3 with a+b+c != 0 are never collinear.
  Point a{1, 1}, b{2, 8}, c{3, 27};
  CHECK(orientation(a, b, c) != Orientation::Collinear);
}

TEST_CASE("orientation is antisymmetric on random rational triples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 9);
  auto rp = [&]() -> Point {
    return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
  };
  for (int i = 0; i < 500; ++i) {
    Point p = rp(), q = rp(), r = rp();
    int o = static_cast<int>(orientation(p, q, r));
    CHECK(static_cast<int>(orientation(q, p, r)) == -o);
    CHECK(static_cast<int>(orientation(p, r, q)) == -o);
    CHECK(static_cast<int>(orientation(r, q, p)) == -o);
  }
}

TEST_CASE("validate_polygon accepts and normalizes") {
  CHECK(kSquare.signed_area2() == 2);
  Polygon cw = make({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  CHECK(cw.signed_area2() == 2);
  CHECK((cw.vertices == kSquare.vertices ||
         cw.signed_area2() == kSquare.signed_area2()));
}

TEST_CASE("validate_polygon rejects bad input") {
  auto kind_of = [](std::initializer_list<std::pair<long, long>> pts) {
    try {
      make(pts);
    } catch (const PolygonError& e) {
      return e.kind();
    }
    throw std::logic_error("expected rejection");
  };
  CHECK(kind_of({{0, 0}, {1, 0}}) == PolygonErrorKind::TooFewVertices);
  CHECK(kind_of({{0, 0}, {1, 0}, {1, 1}, {0, 0}}) == PolygonErrorKind::DuplicateVertex);
  CHECK(kind_of({{0, 0}, {1, 0}, {2, 0}, {1, 3}}) == PolygonErrorKind::CollinearRun);
  CHECK(kind_of({{0, 0}, {2, 2}, {2, 0}, {0, 2}}) == PolygonErrorKind::SelfIntersection);
}

TEST_CASE("convex hull") {
  std::vector<Point> pts = kSquare.vertices;
  auto hull = convex_hull(pts);
  CHECK(hull.size() == 4);
  pts.push_back({Rational(1, 2), Rational(1, 2)});
  hull = convex_hull(pts);
  CHECK(hull.size() == 4);
  for (std::size_t i : hull) CHECK(i < 4);
  // Hull is in convex position: consecutive triples all turn left.
  for (std::size_t i = 0; i < hull.size(); ++i)
    CHECK(orientation(pts[hull[i]], pts[hull[(i + 1) % hull.size()]],
                      pts[hull[(i + 2) % hull.size()]]) == Orientation::Left);
  std::vector<Point> collinear{{Rational(0), Rational(0)},
                               {Rational(1), Rational(1)},
                               {Rational(2), Rational(2)}};
  CHECK_THROWS_AS(convex_hull(collinear), PolygonError);
}

TEST_CASE("point in polygon") {
  CHECK(point_in_polygon({Rational(1, 2), Rational(1, 2)}, kSquare) ==
        PointLocation::Inside);
  CHECK(point_in_polygon({Rational(1, 2), Rational(0)}, kSquare) ==
        PointLocation::Boundary);
  CHECK(point_in_polygon({Rational(2), Rational(2)}, kSquare) ==
        PointLocation::Outside);
}

TEST_CASE("vertex kinds") {
  for (std::size_t i = 0; i < 4; ++i) CHECK(vertex_kind(kSquare, i) == VertexKind::Convex);
  Polygon dart = make({{2, -5}, {7, 0}, {2, 5}, {3, 0}});
  int reflex = 0;
  for (std::size_t i = 0; i < 4; ++i)
    if (vertex_kind(dart, i) == VertexKind::Reflex) ++reflex;
  CHECK(reflex == 1);
}

TEST_CASE("line profile of square") {
  // Horizontal line through the middle: two crossings, one component.
  Line mid{Point{Rational(-1), Rational(1, 2)}, Direction(1, 0)};
  LineProfile prof = line_profile(mid, kSquare);
  CHECK(prof.crossing_count == 2);
  REQUIRE(prof.inside_intervals.size() == 1);
  CHECK(prof.inside_intervals[0].second - prof.inside_intervals[0].first == 1);

  // Line containing the bottom edge: overlap run, no crossing, one component.
  Line bottom{Point{Rational(-1), Rational(0)}, Direction(1, 0)};
  prof = line_profile(bottom, kSquare);
  CHECK(prof.crossing_count == 0);
  REQUIRE(prof.events.size() == 1);
  auto* run = std::get_if<OverlapRun>(&prof.events[0]);
  REQUIRE(run != nullptr);
  CHECK_FALSE(run->crossing);
  CHECK(prof.inside_intervals.size() == 1);

  // x + y = 0 touches only at the corner: touch event, isolated component.
  Line diag{Point{Rational(0), Rational(0)}, Direction(1, -1)};
  prof = line_profile(diag, kSquare);
  CHECK(prof.crossing_count == 0);
  REQUIRE(prof.events.size() == 1);
  CHECK(std::get_if<Touch>(&prof.events[0]) != nullptr);
  REQUIRE(prof.inside_intervals.size() == 1);
  CHECK(prof.inside_intervals[0].first == prof.inside_intervals[0].second);
}

TEST_CASE("stabbing number of convex polygons is 2") {
  auto cert = stabbing_number(kSquare);
  CHECK(cert.value == 2);
  CHECK(crossing_count(cert.witness_line, kSquare) == 2);
  Polygon tri = make({{0, 0}, {4, 0}, {1, 3}});
  CHECK(stabbing_number(tri).value == 2);
}

TEST_CASE("stabbing number of a dart is 4") {
  Polygon dart = make({{2, -5}, {7, 0}, {2, 5}, {3, 0}});
  auto cert = stabbing_number(dart);
  CHECK(cert.value == 4);
  CHECK(crossing_count(cert.witness_line, dart) == 4);
  CHECK(is_k_convex(dart, 2));
  CHECK_FALSE(is_k_convex(dart, 1));
  CHECK(stabbing_oracle(dart, 2000, 0) <= 4);
}

TEST_CASE("segment components") {
  CHECK(segment_components({Rational(1, 4), Rational(1, 2)},
                           {Rational(3, 4), Rational(1, 2)}, kSquare) == 1);
  // Dart: segment across the notch leaves and re-enters.
  Polygon dart = make({{2, -5}, {7, 0}, {2, 5}, {3, 0}});
  CHECK(segment_components({Rational(5, 2), Rational(4)},
                           {Rational(5, 2), Rational(-4)}, dart) == 2);
}
