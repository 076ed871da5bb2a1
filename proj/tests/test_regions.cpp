#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kconvex/fixtures.hpp"
#include "kconvex/regions.hpp"

using namespace kconvex;
namespace fx = kconvex::fixtures;

namespace {

RegionExpr two_polys(Polygon a, Polygon b, bool is_union) {
  RegionExpr e;
  e.env["A"] = std::move(a);
  e.env["B"] = std::move(b);
  std::vector<RegionExpr::Node> ch{RegionExpr::leaf("A"), RegionExpr::leaf("B")};
  e.root = is_union ? RegionExpr::union_of(std::move(ch))
                    : RegionExpr::intersect_of(std::move(ch));
  return e;
}

RegionExpr family_intersection(const std::vector<Polygon>& fam) {
  RegionExpr e;
  std::vector<RegionExpr::Node> ch;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    std::string id = "P" + std::to_string(i);
    e.env[id] = fam[i];
    ch.push_back(RegionExpr::leaf(id));
  }
  e.root = RegionExpr::intersect_of(std::move(ch));
  return e;
}

IntervalSet random_interval_set(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(0, 5), coord(-20, 20), len(0, 6);
  std::vector<std::pair<Rational, Rational>> ivs;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Rational lo(coord(rng), 2);
    ivs.emplace_back(lo, lo + Rational(len(rng), 2));
  }
  return normalize_intervals(std::move(ivs));
}

bool region_member(const RegionExpr::Node& node, const std::map<std::string, Polygon>& env,
                   const Point& p) {
  switch (node.kind) {
    case RegionExpr::Kind::Leaf:
      return point_in_polygon(p, env.at(node.id)) != PointLocation::Outside;
    case RegionExpr::Kind::Union:
      for (const auto& c : node.children)
        if (region_member(c, env, p)) return true;
      return false;
    case RegionExpr::Kind::Intersect:
      for (const auto& c : node.children)
        if (!region_member(c, env, p)) return false;
      return true;
  }
  return false;
}

/// Membership samples at every leaf-interval endpoint, between consecutive
/// endpoints, and outside the hull: the region can only change state at
/// leaf endpoints, so the sampled block count is the exact component count.
void check_against_point_oracle(const RegionExpr& e, const Line& line) {
  std::vector<Rational> brk;
  for (const auto& [id, poly] : e.env)
    for (const auto& iv : line_profile(line, poly).inside_intervals) {
      brk.push_back(iv.first);
      brk.push_back(iv.second);
    }
  std::sort(brk.begin(), brk.end());
  brk.erase(std::unique(brk.begin(), brk.end()), brk.end());
  std::vector<Rational> samples;
  if (brk.empty()) {
    samples.push_back(0);
  } else {
    samples.push_back(brk.front() - 1);
    for (std::size_t i = 0; i < brk.size(); ++i) {
      samples.push_back(brk[i]);
      if (i + 1 < brk.size()) samples.push_back((brk[i] + brk[i + 1]) / 2);
    }
    samples.push_back(brk.back() + 1);
  }
  IntervalSet ivs = line_intervals(e, line);
  int blocks = 0;
  bool prev = false;
  for (const Rational& t : samples) {
    bool member = region_member(e.root, e.env, line.at(t));
    REQUIRE(member == ivs.contains(t));
    if (member && !prev) ++blocks;
    prev = member;
  }
  REQUIRE(blocks == static_cast<int>(ivs.components()));
}

}  // namespace

TEST_CASE("interval set algebra laws") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    IntervalSet a = random_interval_set(rng), b = random_interval_set(rng),
                c = random_interval_set(rng);
    CHECK(interval_union(a, b) == interval_union(b, a));
    CHECK(interval_intersection(a, b) == interval_intersection(b, a));
    CHECK(interval_union(interval_union(a, b), c) ==
          interval_union(a, interval_union(b, c)));
    CHECK(interval_intersection(interval_intersection(a, b), c) ==
          interval_intersection(a, interval_intersection(b, c)));
    CHECK(interval_union(a, a) == a);
    CHECK(interval_intersection(a, a) == a);
    for (std::size_t i = 0; i + 1 < a.intervals.size(); ++i)
      CHECK(a.intervals[i].second < a.intervals[i + 1].first);
  }
}

TEST_CASE("line intervals compose leaf profiles") {
  Polygon sq1 = validate_polygon({fx::ipt(0, 0), fx::ipt(4, 0), fx::ipt(4, 4), fx::ipt(0, 4)});
  Polygon sq2 = validate_polygon({fx::ipt(8, 0), fx::ipt(12, 0), fx::ipt(12, 4), fx::ipt(8, 4)});
  Line through{{Rational(0), Rational(2)}, Direction(1, 0)};

  RegionExpr uni = two_polys(sq1, sq2, true);
  CHECK(line_intervals(uni, through).components() == 2);

  RegionExpr self = two_polys(sq1, sq1, false);
  RegionExpr leaf;
  leaf.env["A"] = sq1;
  leaf.root = RegionExpr::leaf("A");
  CHECK(line_intervals(self, through) == line_intervals(leaf, through));

  RegionExpr unbound;
  unbound.root = RegionExpr::leaf("missing");
  CHECK_THROWS_AS(line_intervals(unbound, through), UnboundId);
}

TEST_CASE("interlocking combs meet the designed line in k+m-1 intervals") {
  auto fam = fx::facing_combs(2, 2);
  RegionExpr e = two_polys(fam[0], fam[1], false);
  Line designed{{Rational(0), Rational(5)}, Direction(1, 0)};
  CHECK(line_intervals(e, designed).components() == 3);
}

TEST_CASE("interval evaluation matches point-membership sampling") {
  std::vector<RegionExpr> exprs;
  exprs.push_back(two_polys(fx::many_pockets(5), fx::spiky_star(3), true));
  auto fam = fx::facing_combs(2, 3);
  exprs.push_back(two_polys(fam[0], fam[1], false));
  exprs.push_back(family_intersection(fx::stacked_combs(2, 2)));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coord(-40, 40);
  for (const RegionExpr& e : exprs)
    for (int trial = 0; trial < 100; ++trial) {
      Point a = fx::ipt(coord(rng), coord(rng)), b = fx::ipt(coord(rng), coord(rng));
      if (a == b) continue;
      check_against_point_oracle(e, line_through(a, b));
    }
}

TEST_CASE("degree of a single polygon is half its stabbing number") {
  for (const Polygon& p : {fx::convex_ngon(8), fx::spiky_star(3), fx::many_pockets(5)}) {
    RegionExpr e;
    e.env["A"] = p;
    e.root = RegionExpr::leaf("A");
    CHECK(empirical_degree(e) == stabbing_number(p).value / 2);
  }
}

TEST_CASE("union degree is tight on aligned combs") {
  auto fam = fx::aligned_comb_union(2, 2);
  CHECK(empirical_degree(two_polys(fam[0], fam[1], true)) == 4);
}

TEST_CASE("intersection degree is tight on interlocking combs") {
  auto fam = fx::facing_combs(2, 2);
  // The pair realizes the figure of two 2-convex sets whose intersection is
  // 3-convex and no better.
  CHECK(empirical_degree(two_polys(fam[0], fam[1], false)) == 3);
}

TEST_CASE("family intersection degree is tight on staggered combs") {
  CHECK(empirical_degree(family_intersection(fx::stacked_combs(2, 2))) == 3);
}

TEST_CASE("union and intersection degrees respect the additive bounds") {
  auto degree = [](const Polygon& p) { return stabbing_number(p).value / 2; };
  std::vector<std::pair<Polygon, Polygon>> pairs;
  pairs.emplace_back(fx::many_pockets(4), fx::spiky_star(2));
  pairs.emplace_back(fx::random_simple_polygon(10, 3), fx::random_simple_polygon(10, 4));
  pairs.emplace_back(fx::pseudo_triangle(2), fx::convex_ngon(6));
  for (const auto& [a, b] : pairs) {
    int da = degree(a), db = degree(b);
    CHECK(empirical_degree(two_polys(a, b, true)) <= da + db);
    CHECK(empirical_degree(two_polys(a, b, false)) <= da + db - 1);
  }
}

TEST_CASE("polygon intersection emptiness with witnesses") {
  Polygon sq1 = validate_polygon({fx::ipt(0, 0), fx::ipt(4, 0), fx::ipt(4, 4), fx::ipt(0, 4)});
  Polygon sq2 = validate_polygon({fx::ipt(2, 2), fx::ipt(6, 2), fx::ipt(6, 6), fx::ipt(2, 6)});
  Polygon far = validate_polygon({fx::ipt(10, 0), fx::ipt(14, 0), fx::ipt(14, 4), fx::ipt(10, 4)});

  auto w = intersection_nonempty({sq1, sq2});
  REQUIRE(w.has_value());
  CHECK(point_in_polygon(*w, sq1) != PointLocation::Outside);
  CHECK(point_in_polygon(*w, sq2) != PointLocation::Outside);

  CHECK_FALSE(intersection_nonempty({sq1, far}).has_value());
  CHECK(intersection_nonempty({sq1}).has_value());
  CHECK_THROWS_AS(intersection_nonempty({}), RegionError);
}

TEST_CASE("ring family has no common point but every subfamily intersects") {
  HellyReport r = helly_check(3);
  CHECK(r.all_two_convex);
  CHECK(r.full_family_empty);
  CHECK(r.proper_subfamilies_nonempty);
  CHECK(r.passed);
  CHECK(r.checks.size() == 3u + 1u + 3u);
  // A single member trivially intersects itself.
  CHECK(intersection_nonempty({r.family[0]}).has_value());
}
