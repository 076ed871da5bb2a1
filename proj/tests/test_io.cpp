#include <catch2/catch_amalgamated.hpp>

#include "kconvex/fixtures.hpp"
#include "kconvex/io.hpp"
#include "kconvex/svg.hpp"

using namespace kconvex;
namespace fx = kconvex::fixtures;
using nlohmann::json;

TEST_CASE("polygon JSON round-trips exactly") {
  std::vector<Polygon> polys{fx::comb(3), fx::pseudo_triangle(5), fx::amoeba(4),
                             fx::random_simple_polygon(20, 9)};
  Polygon frac = validate_polygon(
      {{Rational(1, 3), Rational(-2, 7)}, {Rational(5), Rational(0)}, {Rational(1, 2), Rational(9, 4)}});
  polys.push_back(frac);
  for (const Polygon& p : polys) {
    Polygon back = polygon_from_json(polygon_to_json(p));
    REQUIRE(back.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(back.vertices[i] == p.vertices[i]);
  }
}

TEST_CASE("polygon JSON rejects malformed input") {
  CHECK_THROWS_AS(polygon_from_json(json::parse("{}")), IoError);
  CHECK_THROWS_AS(polygon_from_json(json::parse(R"({"vertices": "no"})")), IoError);
  CHECK_THROWS_AS(polygon_from_json(json::parse(R"({"vertices": [["1"]]})")), IoError);
  CHECK_THROWS_AS(polygon_from_json(json::parse(R"({"vertices": [[1, 2], [3, 4], [5, 6]]})")),
                  IoError);
  CHECK_THROWS_AS(
      polygon_from_json(json::parse(R"({"vertices": [["a","0"],["1","0"],["0","1"]]})")), IoError);
  CHECK_THROWS_AS(
      polygon_from_json(json::parse(R"({"vertices": [["1/0","0"],["1","0"],["0","1"]]})")),
      IoError);
  // Structurally fine JSON but a degenerate polygon still fails validation.
  CHECK_THROWS_AS(polygon_from_json(json::parse(R"({"vertices": [["0","0"],["1","0"]]})")),
                  PolygonError);
}

TEST_CASE("family JSON round-trips and validates") {
  std::map<std::string, Polygon> fam;
  auto combs = fx::stacked_combs(2, 2);
  fam.emplace("A", combs[0]);
  fam.emplace("B", combs[1]);
  auto back = family_from_json(family_to_json(fam));
  REQUIRE(back.size() == 2);
  CHECK(back.at("A").vertices == fam.at("A").vertices);
  CHECK(back.at("B").vertices == fam.at("B").vertices);
  CHECK_THROWS_AS(family_from_json(json::parse("{}")), IoError);
  CHECK_THROWS_AS(family_from_json(json::parse(R"({"polygons": {}})")), IoError);
}

TEST_CASE("region specs parse into evaluable expressions") {
  std::map<std::string, Polygon> fam;
  auto combs = fx::facing_combs(2, 2);
  fam.emplace("A", combs[0]);
  fam.emplace("B", combs[1]);
  json spec = family_to_json(fam);
  spec["expr"] = json::array({"intersect", "A", "B"});
  RegionExpr e = region_from_json(spec);
  CHECK(empirical_degree(e, 50, 0) == 3);

  spec["expr"] = json::array({"union", "A", json::array({"intersect", "A", "B"})});
  CHECK_NOTHROW(region_from_json(spec));

  spec["expr"] = json::array({"xor", "A", "B"});
  CHECK_THROWS_AS(region_from_json(spec), IoError);
  spec["expr"] = json::array({"union"});
  CHECK_THROWS_AS(region_from_json(spec), IoError);
  spec["expr"] = "C";
  CHECK_THROWS_AS(empirical_degree(region_from_json(spec)), UnboundId);
}

TEST_CASE("SVG coordinates round to six decimals without floating point") {
  using detail::svg_coord;
  CHECK(svg_coord(Rational(0)) == "0");
  CHECK(svg_coord(Rational(-7)) == "-7");
  CHECK(svg_coord(Rational(1, 2)) == "0.5");
  CHECK(svg_coord(Rational(1, 3)) == "0.333333");
  CHECK(svg_coord(Rational(2, 3)) == "0.666667");
  CHECK(svg_coord(Rational(-1, 3)) == "-0.333333");
  CHECK(svg_coord(Rational(1, 2000000)) == "0.000001");
  CHECK(svg_coord(Rational(1, 2000000)) == "0.000001");  // half rounds away from zero
  CHECK(svg_coord(Rational(-1, 2000000)) == "-0.000001");
  CHECK(svg_coord(Rational(1, 4000000)) == "0");  // below half rounds in
  CHECK(svg_coord(Rational(1, 5000000)) == "0");
  CHECK(svg_coord(Rational(123456789, 1000)) == "123456.789");
}

TEST_CASE("rendering is deterministic and well-formed") {
  RenderSpec spec;
  spec.polygons.push_back({fx::comb(2), "poly"});
  spec.polygons.push_back({fx::convex_ngon(5), "alt"});
  spec.lines.push_back(stabbing_number(fx::comb(2)).witness_line);
  spec.segments.push_back({{Rational(0), Rational(0)}, {Rational(1, 3), Rational(5)}});
  spec.points.push_back({{Rational(2), Rational(2)}, "p"});
  std::string a = render_svg(spec), b = render_svg(spec);
  CHECK(a == b);
  CHECK(a.find("<svg") != std::string::npos);
  CHECK(a.find("</svg>") != std::string::npos);
  CHECK(a.find("<polygon") != std::string::npos);
  CHECK(a.find("viewBox=\"") != std::string::npos);
  // Every drawn y is negated, so a vertex at (5, 2) renders as "5,-2".
  RenderSpec flip;
  flip.polygons.push_back({validate_polygon({fx::ipt(0, 0), fx::ipt(5, 2), fx::ipt(0, 2)}), "poly"});
  CHECK(render_svg(flip).find("5,-2") != std::string::npos);
}
