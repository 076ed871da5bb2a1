#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kconvex/hardness.hpp"

using namespace kconvex;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
  std::vector<Int> out;
  for (long x : xs) out.push_back(Int(x));
  return out;
}

}  // namespace

TEST_CASE("brute-force triple sum") {
  CHECK(three_sum_brute(ints({1, 2, -3})));
  CHECK_FALSE(three_sum_brute(ints({1, 2, 4})));
  CHECK(three_sum_brute(ints({0, 0, 0})));
  CHECK(three_sum_brute(ints({5, 5, -10})));
  CHECK_FALSE(three_sum_brute(ints({5, 5, 10})));
  CHECK_FALSE(three_sum_brute(ints({})));
}

TEST_CASE("pre-checks decide repeated-value inputs") {
  CHECK(prepare_reduction(ints({0, 0, 0})).early_exit.has_value());
  CHECK(prepare_reduction(ints({5, 5, -10})).early_exit.has_value());
  CHECK_FALSE(prepare_reduction(ints({1, 2, -3})).early_exit.has_value());
  CHECK_THROWS_AS(build_P2(ints({0, 0, 0})), EarlyExit);
  CHECK_THROWS_AS(build_P1(ints({5, 5, -10})), EarlyExit);

  ReductionInstance r = prepare_reduction(ints({3, 1, 2, 2, 4}));
  CHECK(r.dedup_sorted == ints({1, 2, 3, 4}));
  CHECK(r.m == 0);
  CHECK(r.M == 5);
  CHECK(r.epsilon == Rational(1, 30));
}

TEST_CASE("cubic points are collinear exactly on zero-sum triples") {
  for (long a = -12; a <= 12; ++a)
    for (long b = a + 1; b <= 12; ++b)
      for (long c = b + 1; c <= 12; ++c) {
        bool collinear = orientation(cubic_point(Rational(a)), cubic_point(Rational(b)),
                                     cubic_point(Rational(c))) == Orientation::Collinear;
        if (collinear != (a + b + c == 0)) {
          CAPTURE(a, b, c);
          FAIL("collinearity does not match the zero-sum condition");
        }
      }
  SUCCEED();
}

TEST_CASE("slot transversals exist exactly for collinear tops") {
  CHECK(slots_transversal(Int(-3), Int(1), Int(2), Int(-4), Int(3)));
  CHECK_FALSE(slots_transversal(Int(1), Int(2), Int(4), Int(0), Int(5)));
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<long> pick(-12, 12);
  int done = 0;
  while (done < 50) {
    long a = pick(rng), b = pick(rng), c = pick(rng);
    if (a == b || b == c || a == c) continue;
    long lo = std::min({a, b, c}) - 1, hi = std::max({a, b, c}) + 1;
    CAPTURE(a, b, c);
    CHECK(slots_transversal(Int(a), Int(b), Int(c), Int(lo), Int(hi)) ==
          (a + b + c == 0));
    ++done;
  }
}

TEST_CASE("plain cubic polygon") {
  ReductionInstance r = build_P1(ints({-2, 0, 1, 3}));
  REQUIRE(r.p1.has_value());
  CHECK(r.p1->size() == 7);
  CHECK(stabbing_number(*r.p1).value == 4);

  ReductionInstance tiny = build_P1(ints({1}));
  CHECK(tiny.p1->size() == 4);
}

TEST_CASE("notched polygon stabbing values") {
  auto stab = [](std::initializer_list<long> xs) {
    ReductionInstance r = build_P2(ints(xs));
    REQUIRE(r.p2->size() == 3 * r.dedup_sorted.size() + 3);
    return stabbing_number(*r.p2).value;
  };
  // Negative instances sit at 8.
  CHECK(stab({1, 2, 4}) == 8);
  CHECK(stab({0, 1, 3, 5}) == 8);
  // A zero-sum triple raises the count to 10 when some input value lies
  // strictly between its two largest members, so the crossings near the
  // line-cubic intersections land on real boundary chords...
  CHECK(stab({-4, 1, 2, 3}) == 10);
  // ...but when the two largest members are adjacent in the input, both
  // intersections fall inside a single chord and the count stays at 8,
  // indistinguishable from a negative instance.
  CHECK(stab({-3, 1, 2}) == 8);
  CHECK(stab({-5, 2, 3}) == 8);
  CHECK(stab({-1, 0, 1}) == 8);
}

TEST_CASE("four-convexity of the notched polygon tracks the threshold") {
  CHECK(is_k_convex(*build_P2(ints({1, 2, 4})).p2, 4));
  CHECK_FALSE(is_k_convex(*build_P2(ints({-4, 1, 2, 3})).p2, 4));
}

TEST_CASE("calibration reports the non-separation honestly") {
  CHECK_THROWS_AS(calibrate_thresholds(), CalibrationFailure);
}

TEST_CASE("geometric decision procedure") {
  // Pre-check paths work end to end.
  CHECK(decide_3sum_geometric(ints({0, 0, 0})));
  CHECK(decide_3sum_geometric(ints({5, 5, -10})));
  CHECK_FALSE(decide_3sum_geometric(ints({1, 2})));
  CHECK_FALSE(decide_3sum_geometric(ints({7})));
  // The geometric path depends on calibration, which currently fails.
  CHECK_THROWS_AS(decide_3sum_geometric(ints({1, 2, 4})), CalibrationFailure);
  CHECK_THROWS_AS(decide_3sum_geometric(ints({-3, 1, 2})), CalibrationFailure);
}
