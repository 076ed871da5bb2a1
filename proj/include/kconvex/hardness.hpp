#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kconvex/stabbing.hpp"

namespace kconvex {

/// The pre-checks on the input list (zero appearing thrice, or a duplicated
/// value a with -2a present) already prove a zero-sum triple, so no polygon
/// needs to be built.
class EarlyExit : public std::runtime_error {
 public:
  explicit EarlyExit(const std::string& reason)
      : std::runtime_error("input decided before reduction: " + reason) {}
};

/// The calibration runs could not find a threshold separating zero-sum
/// inputs from the rest.
class CalibrationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Point cubic_point(const Rational& x) { return {x, x * x * x}; }

/// Reduction state: the deduplicated sorted input, the padding bounds
/// m/M, the slot depth epsilon = 1/(6(M-m)), and the polygons built from
/// them.
struct ReductionInstance {
  std::vector<Int> input;
  std::vector<Int> dedup_sorted;
  Int m = 0, M = 0;
  Rational epsilon;
  std::optional<std::string> early_exit;  // set => answer is yes
  std::optional<Polygon> p1, p2;
};

inline bool three_sum_brute(const std::vector<Int>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      for (std::size_t k = j + 1; k < xs.size(); ++k)
        if (xs[i] + xs[j] + xs[k] == 0) return true;
  return false;
}

/// Sorts, runs the repeated-value checks, and deduplicates. After this any
/// remaining zero-sum triple consists of three distinct values.
inline ReductionInstance prepare_reduction(std::vector<Int> xs) {
  ReductionInstance r;
  r.input = xs;
  std::sort(xs.begin(), xs.end());
  std::map<Int, int> count;
  for (const Int& x : xs) ++count[x];
  if (count[Int(0)] >= 3) {
    r.early_exit = "zero appears three times";
  } else {
    for (const auto& [v, c] : count)
      if (c >= 2 && v != 0 && count.count(-2 * v)) {
        r.early_exit = "value " + v.str() + " repeats and " + Int(-2 * v).str() +
                       " is present";
        break;
      }
  }
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  r.dedup_sorted = xs;
  if (!xs.empty()) {
    r.m = xs.front() - 1;
    r.M = xs.back() + 1;
    r.epsilon = Rational(1, 6 * (r.M - r.m));
  }
  return r;
}

/// Polygon through the cubic points of the deduplicated values, padded by
/// p_m and p_M and closed by the corner q = (M, m^3).
inline ReductionInstance build_P1(const std::vector<Int>& xs) {
  ReductionInstance r = prepare_reduction(xs);
  if (r.early_exit) throw EarlyExit(*r.early_exit);
  if (r.dedup_sorted.empty()) throw EarlyExit("empty input has no triple");
  std::vector<Point> v{cubic_point(Rational(r.m))};
  for (const Int& a : r.dedup_sorted) v.push_back(cubic_point(Rational(a)));
  v.push_back(cubic_point(Rational(r.M)));
  v.push_back({Rational(r.M), Rational(r.m * r.m * r.m)});
  r.p1 = validate_polygon(std::move(v));
  return r;
}

/// As build_P1, but each cubic point p_a is replaced by a notch
/// u_a p'_a v_a: the boundary dips to depth epsilon below the cubic over a
/// width of 2*epsilon^2, so a line can enter and leave the polygon through
/// the notch. Each notch is probed at construction time with the cubic's
/// tangent at a shifted down by epsilon/2, which must cross both notch
/// edges.
inline ReductionInstance build_P2(const std::vector<Int>& xs) {
  ReductionInstance r = prepare_reduction(xs);
  if (r.early_exit) throw EarlyExit(*r.early_exit);
  if (r.dedup_sorted.empty()) throw EarlyExit("empty input has no triple");
  const Rational eps = r.epsilon, eps2 = eps * eps;
  std::vector<Point> v{cubic_point(Rational(r.m))};
  for (const Int& a : r.dedup_sorted) {
    v.push_back(cubic_point(Rational(a) - eps2));
    Point top = cubic_point(Rational(a));
    v.push_back({top.x, top.y - eps});
    v.push_back(cubic_point(Rational(a) + eps2));
  }
  v.push_back(cubic_point(Rational(r.M)));
  v.push_back({Rational(r.M), Rational(r.m * r.m * r.m)});
  Polygon p = validate_polygon(std::move(v));
  for (std::size_t i = 0; i < r.dedup_sorted.size(); ++i) {
    Rational a(r.dedup_sorted[i]);
    Point anchor{a, a * a * a - eps / 2};
    Rational slope = 3 * a * a;
    Line probe{anchor, Direction(denominator(slope), numerator(slope))};
    Point u = cubic_point(a - eps2), bottom{a, a * a * a - eps},
          w = cubic_point(a + eps2);
    if (sign(probe.side(u)) * sign(probe.side(bottom)) >= 0 ||
        sign(probe.side(bottom)) * sign(probe.side(w)) >= 0)
      throw std::logic_error("notch " + std::to_string(i) +
                             " is not crossed by its tangent probe");
  }
  r.p2 = std::move(p);
  return r;
}

/// True iff one straight line meets all three vertical slots hanging from
/// the cubic at a, b, c (each of depth 1/(6(M-m))). If a transversal
/// exists, one exists through two slot endpoints, so checking the lines
/// through endpoint pairs is exhaustive.
inline bool slots_transversal(const Int& a, const Int& b, const Int& c,
                              const Int& m, const Int& M) {
  const Rational eps(1, 6 * (M - m));
  std::array<Rational, 3> xs{Rational(a), Rational(b), Rational(c)};
  std::array<std::array<Point, 2>, 3> slot;
  for (int i = 0; i < 3; ++i) {
    Point top = cubic_point(xs[i]);
    slot[i] = {top, Point{top.x, top.y - eps}};
  }
  auto meets_all = [&](const Point& p, const Point& q) {
    if (p.x == q.x) return false;  // vertical line meets at most one slot
    for (int i = 0; i < 3; ++i) {
      Rational y = p.y + (xs[i] - p.x) * (q.y - p.y) / (q.x - p.x);
      if (y > slot[i][0].y || y < slot[i][1].y) return false;
    }
    return true;
  };
  for (int i = 0; i < 3; ++i)
    for (int ei = 0; ei < 2; ++ei)
      for (int j = i + 1; j < 3; ++j)
        for (int ej = 0; ej < 2; ++ej)
          if (meets_all(slot[i][ei], slot[j][ej])) return true;
  return false;
}

struct CalibratedThresholds {
  int stab_yes = 0;
  int stab_no = 0;
};

/// Measures the stabbing number of the reduction polygon on a known
/// zero-sum input and a known negative input. The decision rule needs
/// stab_yes > stab_no; if the two measurements coincide the reduction
/// cannot separate the answers and calibration fails.
inline CalibratedThresholds calibrate_thresholds() {
  ReductionInstance yes = build_P2({Int(-3), Int(1), Int(2)});
  ReductionInstance no = build_P2({Int(1), Int(2), Int(4)});
  CalibratedThresholds t;
  t.stab_yes = stabbing_number(*yes.p2).value;
  t.stab_no = stabbing_number(*no.p2).value;
  if (t.stab_yes <= t.stab_no)
    throw CalibrationFailure(
        "zero-sum and negative instances are not separated: stabbing number is " +
        std::to_string(t.stab_yes) + " on {-3,1,2} and " + std::to_string(t.stab_no) +
        " on {1,2,4}; the notch construction only raises the count when an input "
        "value lies strictly between the two largest members of the zero-sum triple");
  return t;
}

/// Full pipeline: pre-checks, then the stabbing number of the notched
/// polygon compared against calibrated thresholds. An unexpected middle
/// value is surfaced as an error, never guessed.
inline bool decide_3sum_geometric(const std::vector<Int>& xs) {
  ReductionInstance r = prepare_reduction(xs);
  if (r.early_exit) return true;
  // After deduplication any remaining triple uses three distinct values.
  if (r.dedup_sorted.size() < 3) return false;
  CalibratedThresholds t = calibrate_thresholds();
  ReductionInstance full = build_P2(xs);
  int s = stabbing_number(*full.p2).value;
  if (s >= t.stab_yes) return true;
  if (s <= t.stab_no) return false;
  throw CalibrationFailure("stabbing number " + std::to_string(s) +
                           " falls between the calibrated thresholds");
}

}  // namespace kconvex
