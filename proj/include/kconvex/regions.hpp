#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kconvex/fixtures.hpp"
#include "kconvex/stabbing.hpp"
#include "kconvex/twoconvex.hpp"

namespace kconvex {

class UnboundId : public std::runtime_error {
 public:
  explicit UnboundId(const std::string& id)
      : std::runtime_error("region expression references unbound polygon id: " + id) {}
};

class RegionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Union/intersection tree over named polygons. Regions are never
/// materialized; every measurement restricts the expression to one line.
struct RegionExpr {
  enum class Kind { Leaf, Union, Intersect };
  struct Node {
    Kind kind = Kind::Leaf;
    std::string id;               // Leaf only
    std::vector<Node> children;   // Union/Intersect only
  };
  Node root;
  std::map<std::string, Polygon> env;

  static Node leaf(std::string id) { return {Kind::Leaf, std::move(id), {}}; }
  static Node union_of(std::vector<Node> children) {
    return {Kind::Union, "", std::move(children)};
  }
  static Node intersect_of(std::vector<Node> children) {
    return {Kind::Intersect, "", std::move(children)};
  }
};

/// Disjoint sorted maximal closed parameter intervals along one line;
/// degenerate single-point intervals are allowed.
struct IntervalSet {
  std::vector<std::pair<Rational, Rational>> intervals;

  std::size_t components() const { return intervals.size(); }
  bool contains(const Rational& t) const {
    for (const auto& [lo, hi] : intervals)
      if (lo <= t && t <= hi) return true;
    return false;
  }
  bool operator==(const IntervalSet&) const = default;
};

/// Sorts and merges overlapping or touching closed intervals.
inline IntervalSet normalize_intervals(std::vector<std::pair<Rational, Rational>> ivs) {
  for (auto& iv : ivs)
    if (iv.second < iv.first) std::swap(iv.first, iv.second);
  std::sort(ivs.begin(), ivs.end());
  IntervalSet out;
  for (auto& iv : ivs) {
    if (!out.intervals.empty() && iv.first <= out.intervals.back().second)
      out.intervals.back().second = std::max(out.intervals.back().second, iv.second);
    else
      out.intervals.push_back(std::move(iv));
  }
  return out;
}

inline IntervalSet interval_union(const IntervalSet& a, const IntervalSet& b) {
  std::vector<std::pair<Rational, Rational>> all = a.intervals;
  all.insert(all.end(), b.intervals.begin(), b.intervals.end());
  return normalize_intervals(std::move(all));
}

inline IntervalSet interval_intersection(const IntervalSet& a, const IntervalSet& b) {
  std::vector<std::pair<Rational, Rational>> out;
  std::size_t i = 0, j = 0;
  while (i < a.intervals.size() && j < b.intervals.size()) {
    Rational lo = std::max(a.intervals[i].first, b.intervals[j].first);
    Rational hi = std::min(a.intervals[i].second, b.intervals[j].second);
    if (lo <= hi) out.emplace_back(lo, hi);
    if (a.intervals[i].second < b.intervals[j].second)
      ++i;
    else
      ++j;
  }
  return normalize_intervals(std::move(out));
}

namespace detail {

inline IntervalSet eval_region(const RegionExpr::Node& node,
                               const std::map<std::string, Polygon>& env,
                               const Line& line) {
  switch (node.kind) {
    case RegionExpr::Kind::Leaf: {
      auto it = env.find(node.id);
      if (it == env.end()) throw UnboundId(node.id);
      return normalize_intervals(line_profile(line, it->second).inside_intervals);
    }
    case RegionExpr::Kind::Union:
    case RegionExpr::Kind::Intersect: {
      if (node.children.empty())
        throw RegionError("union/intersect node needs at least one child");
      IntervalSet acc = eval_region(node.children[0], env, line);
      for (std::size_t c = 1; c < node.children.size(); ++c) {
        IntervalSet next = eval_region(node.children[c], env, line);
        acc = node.kind == RegionExpr::Kind::Union ? interval_union(acc, next)
                                                   : interval_intersection(acc, next);
      }
      return acc;
    }
  }
  throw RegionError("malformed region node");
}

inline void collect_leaves(const RegionExpr::Node& node,
                           const std::map<std::string, Polygon>& env,
                           std::map<std::string, const Polygon*>& out) {
  if (node.kind == RegionExpr::Kind::Leaf) {
    auto it = env.find(node.id);
    if (it == env.end()) throw UnboundId(node.id);
    out.emplace(node.id, &it->second);
  } else {
    for (const auto& child : node.children) collect_leaves(child, env, out);
  }
}

}  // namespace detail

/// Components of line ∩ region as closed parameter intervals, computed
/// compositionally from the leaf profiles.
inline IntervalSet line_intervals(const RegionExpr& expr, const Line& line) {
  return detail::eval_region(expr.root, expr.env, line);
}

/// Exact maximum component count of line ∩ region over all lines: the
/// count is constant on cells of the dual arrangement of all leaf edges,
/// and the candidate set (perturbed lines through leaf-vertex pairs plus
/// perturbed verticals, realized against every leaf) covers every cell.
/// A seeded random-line batch cross-checks that it never beats the
/// candidate maximum.
inline int empirical_degree(const RegionExpr& expr, int random_trials = 200,
                            std::uint64_t seed = 0) {
  std::map<std::string, const Polygon*> leaves;
  detail::collect_leaves(expr.root, expr.env, leaves);
  std::vector<const Polygon*> polys;
  std::vector<Point> pts;
  for (const auto& [id, poly] : leaves) {
    polys.push_back(poly);
    pts.insert(pts.end(), poly->vertices.begin(), poly->vertices.end());
  }
  int best = 0;
  for_each_candidate_line(pts, [&](const CandidateLine& cand) {
    Line line = cand.is_base() ? cand.base : cand.realize(polys);
    best = std::max(best, static_cast<int>(line_intervals(expr, line).components()));
  });

  Point lo = pts[0], hi = pts[0];
  for (const Point& p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  Rational wx = hi.x - lo.x, wy = hi.y - lo.y;
  if (wx == 0) wx = 1;
  if (wy == 0) wy = 1;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> grid(0, 1 << 16);
  auto random_point = [&]() -> Point {
    Rational fx(grid(rng), 1 << 16), fy(grid(rng), 1 << 16);
    return {lo.x - wx / 2 + fx * 2 * wx, lo.y - wy / 2 + fy * 2 * wy};
  };
  for (int i = 0; i < random_trials; ++i) {
    Point a = random_point(), b = random_point();
    if (a == b) continue;
    int c = static_cast<int>(line_intervals(expr, line_through(a, b)).components());
    if (c > best)
      throw std::logic_error("random line found " + std::to_string(c) +
                             " components, beating the candidate maximum " +
                             std::to_string(best));
  }
  return best;
}

/// Exact emptiness decision for the intersection of closed polygons, with a
/// witness when nonempty. Any nonempty intersection contains a polygon
/// vertex or a crossing point of two edges of different polygons (the
/// extreme points of the intersection are of one of these forms), so
/// testing those candidates is complete.
inline std::optional<Point> intersection_nonempty(const std::vector<Polygon>& polys) {
  if (polys.empty()) throw RegionError("intersection_nonempty needs >= 1 polygon");
  auto in_all = [&](const Point& q) {
    for (const Polygon& p : polys)
      if (point_in_polygon(q, p) == PointLocation::Outside) return false;
    return true;
  };
  for (const Polygon& p : polys)
    for (const Point& v : p.vertices)
      if (in_all(v)) return v;
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j)
      for (std::size_t ei = 0; ei < polys[i].size(); ++ei)
        for (std::size_t ej = 0; ej < polys[j].size(); ++ej) {
          const Point &a = polys[i].vertices[ei], &b = polys[i].vertex(ei + 1);
          const Point &c = polys[j].vertices[ej], &d = polys[j].vertex(ej + 1);
          if (!segments_intersect(a, b, c, d)) continue;
          // Collinear overlaps are spanned by endpoint candidates above.
          auto q = line_intersection(line_through(a, b), line_through(c, d));
          if (!q || !point_on_segment(*q, a, b) || !point_on_segment(*q, c, d)) continue;
          if (in_all(*q)) return *q;
        }
  return std::nullopt;
}

/// One named family from the no-common-point construction: thin 2-convex
/// rings around a convex m-gon, every proper subfamily intersecting, the
/// full family empty.
struct HellyReport {
  int m = 0;
  std::vector<Polygon> family;
  bool all_two_convex = false;
  bool full_family_empty = false;
  bool proper_subfamilies_nonempty = false;
  std::vector<std::string> checks;
  bool passed = false;
};

/// Builds the m-member ring family and verifies the full pattern. Only the
/// m leave-one-out subfamilies are tested directly: every smaller proper
/// subfamily contains one of them, hence inherits a nonempty intersection.
inline HellyReport helly_check(int m) {
  HellyReport r;
  r.m = m;
  r.family = fixtures::helly_family(m);
  r.all_two_convex = true;
  for (int i = 0; i < m; ++i) {
    bool two = recognize_2convex(r.family[i]).is_two_convex;
    r.all_two_convex = r.all_two_convex && two;
    r.checks.push_back("member " + std::to_string(i) +
                       (two ? " is 2-convex" : " is NOT 2-convex"));
  }
  r.full_family_empty = !intersection_nonempty(r.family).has_value();
  r.checks.push_back(r.full_family_empty ? "full family intersection is empty"
                                         : "full family intersection is NONEMPTY");
  r.proper_subfamilies_nonempty = true;
  for (int skip = 0; skip < m; ++skip) {
    std::vector<Polygon> sub;
    for (int i = 0; i < m; ++i)
      if (i != skip) sub.push_back(r.family[i]);
    bool nonempty = intersection_nonempty(sub).has_value();
    r.proper_subfamilies_nonempty = r.proper_subfamilies_nonempty && nonempty;
    r.checks.push_back("subfamily without member " + std::to_string(skip) +
                       (nonempty ? " intersects" : " is EMPTY"));
  }
  r.passed = r.all_two_convex && r.full_family_empty && r.proper_subfamilies_nonempty;
  return r;
}

}  // namespace kconvex
