#include <catch2/catch_amalgamated.hpp>

#include "kconvex/fixtures.hpp"
#include "kconvex/shape.hpp"

using namespace kconvex;

namespace {

Polygon make(std::initializer_list<std::pair<long, long>> pts) {
  std::vector<Point> v;
  for (auto [x, y] : pts) v.push_back({Rational(x), Rational(y)});
  return validate_polygon(std::move(v));
}

}  // namespace

TEST_CASE("pockets of a convex polygon") {
  PocketChains pc = pocket_chains(fixtures::convex_ngon(8));
  CHECK(pc.hull.size() == 8);
  CHECK(pc.pockets.empty());
  CHECK(convex_chains(fixtures::convex_ngon(8)).chains.size() == 1);
}

TEST_CASE("single-notch hexagon pocket split") {
  Polygon hex = make({{0, 0}, {6, 0}, {6, 6}, {4, 2}, {2, 2}, {0, 6}});
  PocketChains pc = pocket_chains(hex);
  CHECK(pc.hull == std::vector<std::size_t>{0, 1, 2, 5});
  REQUIRE(pc.pockets.size() == 1);
  const Pocket& p = pc.pockets[0];
  CHECK(p.c1 == (IndexRange{2, 1}));
  CHECK(p.c2 == (IndexRange{3, 2}));
  CHECK(p.c3 == (IndexRange{5, 1}));
}

TEST_CASE("amoeba pockets and chains") {
  for (int k : {3, 4}) {
    Polygon p = fixtures::amoeba(k);
    CHECK(p.size() == std::size_t(2 * k * k));
    PocketChains pc = pocket_chains(p);
    CHECK(pc.hull.size() == std::size_t(k));
    REQUIRE(pc.pockets.size() == std::size_t(k));
    for (const Pocket& pk : pc.pockets) CHECK(pk.c2.length == std::size_t(k));
    ChainDecomposition dec = convex_chains(p);
    CHECK(dec.chains.size() == std::size_t(2 * k));
    for (const IndexRange& r : dec.chains) CHECK(r.length == std::size_t(k));
  }
}

TEST_CASE("chain count is bounded by twice the hull size") {
  std::vector<Polygon> corpus;
  corpus.push_back(fixtures::pseudo_triangle(3));
  corpus.push_back(fixtures::many_pockets(6));
  corpus.push_back(fixtures::amoeba(3));
  corpus.push_back(make({{0, 0}, {6, 0}, {6, 6}, {4, 2}, {2, 2}, {0, 6}}));
  for (const Polygon& p : corpus) {
    std::size_t k = convex_hull(p.vertices).size();
    CHECK(convex_chains(p).chains.size() <= 2 * k);
  }
  CHECK(convex_chains(fixtures::pseudo_triangle(4)).chains.size() <= 6);
}

TEST_CASE("many_pockets has n/2 pockets") {
  for (int m : {4, 6, 9}) {
    Polygon p = fixtures::many_pockets(m);
    CHECK(pocket_chains(p).pockets.size() == std::size_t(m));
  }
}

TEST_CASE("largest convex subset") {
  Polygon conv = fixtures::convex_ngon(9);
  CHECK(largest_convex_subset(conv).size() == 9);

  for (int k : {4, 6, 8}) {
    Polygon p = fixtures::amoeba(k);
    auto sub = largest_convex_subset(p);
    CHECK(sub.size() == convex_subset_bound(p.size()));
    CHECK(sub.size() == std::size_t(k));
    std::vector<Point> pts;
    for (std::size_t i : sub) pts.push_back(p.vertices[i]);
    CHECK(convex_hull(pts).size() == pts.size());
  }

  // Guaranteed lower bound over assorted 2-convex polygons.
  std::vector<Polygon> corpus;
  corpus.push_back(fixtures::pseudo_triangle(5));
  corpus.push_back(fixtures::many_pockets(8));
  corpus.push_back(fixtures::spiky_star(2));
  corpus.push_back(fixtures::comb(2));
  for (const Polygon& p : corpus)
    CHECK(largest_convex_subset(p).size() >= convex_subset_bound(p.size()));
}

TEST_CASE("convex partition") {
  CHECK(convex_partition(fixtures::convex_ngon(10)).size() == 1);
  CHECK(convex_partition(make({{0, 0}, {3, 0}, {1, 2}})).size() == 1);

  for (int k : {4, 6, 8}) {
    Polygon p = fixtures::amoeba(k);
    auto parts = convex_partition(p);
    std::size_t n = p.size();
    std::size_t bound = 0;
    while (bound * bound < 8 * n) ++bound;  // ceil(2*sqrt(2n))
    CHECK(parts.size() <= bound);
    std::vector<int> seen(n, 0);
    std::size_t total = 0;
    for (const auto& part : parts) {
      total += part.size();
      for (std::size_t i : part) seen[i]++;
      std::vector<Point> pts;
      for (std::size_t i : part) pts.push_back(p.vertices[i]);
      if (pts.size() > 2) CHECK(convex_hull(pts).size() == pts.size());
    }
    CHECK(total == n);
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}
