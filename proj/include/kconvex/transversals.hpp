#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kconvex/stabbing.hpp"

namespace kconvex {

/// Two components of different objects shared a stretch of the line: the
/// family is not disjoint, so the visit order is ill-defined.
class OverlapAmbiguity : public std::runtime_error {
 public:
  OverlapAmbiguity(const std::string& a, const std::string& b)
      : std::runtime_error("components of '" + a + "' and '" + b +
                           "' overlap on the transversal") {}
};

/// Generalized geometric permutation: the visit order of object ids along a
/// transversal, orientation-free (a sequence and its reversal are the same
/// permutation, stored as the lexicographic minimum of the two).
using Ggp = std::vector<std::string>;

inline Ggp canonical_ggp(Ggp seq) {
  Ggp rev(seq.rbegin(), seq.rend());
  return rev < seq ? rev : seq;
}

/// Visit order of the family along the line, absent when some member is
/// missed. Each component of line ∩ member contributes one occurrence.
inline std::optional<Ggp> transversal_sequence(const Line& line,
                                               const std::map<std::string, Polygon>& polys) {
  struct Visit {
    Rational start, end;
    const std::string* id;
  };
  std::vector<Visit> visits;
  for (const auto& [id, poly] : polys) {
    LineProfile prof = line_profile(line, poly);
    if (prof.inside_intervals.empty()) return std::nullopt;
    for (const auto& iv : prof.inside_intervals)
      visits.push_back({iv.first, iv.second, &id});
  }
  std::sort(visits.begin(), visits.end(),
            [](const Visit& a, const Visit& b) { return a.start < b.start; });
  for (std::size_t i = 0; i + 1 < visits.size(); ++i) {
    // Sorted by start; carrying the running maximum end forward catches
    // containment as well as plain overlap.
    if (visits[i + 1].start <= visits[i].end && *visits[i].id != *visits[i + 1].id)
      throw OverlapAmbiguity(*visits[i].id, *visits[i + 1].id);
    visits[i + 1].end = std::max(visits[i + 1].end, visits[i].end);
  }
  Ggp seq;
  for (const Visit& v : visits) seq.push_back(*v.id);
  return canonical_ggp(std::move(seq));
}

/// All generalized geometric permutations over all transversal lines. The
/// visit order is constant on the full-dimensional cells of the dual
/// arrangement of all edge double-wedges, and every cell closure touches a
/// line through two family vertices, so evaluating every perturbation
/// sector of every vertex-pair line (and the vertical fringe) is exhaustive.
inline std::map<Ggp, Line> enumerate_ggp_witnessed(
    const std::map<std::string, Polygon>& polys) {
  std::vector<const Polygon*> ptrs;
  std::vector<Point> pts;
  for (const auto& [id, poly] : polys) {
    ptrs.push_back(&poly);
    pts.insert(pts.end(), poly.vertices.begin(), poly.vertices.end());
  }
  std::map<Ggp, Line> out;
  for_each_candidate_line(pts, [&](const CandidateLine& cand) {
    if (cand.is_base()) return;  // generic lines only: one per sector
    Line line = cand.realize(ptrs);
    if (auto seq = transversal_sequence(line, polys)) out.emplace(*seq, line);
  });
  return out;
}

inline std::set<Ggp> enumerate_ggp(const std::map<std::string, Polygon>& polys) {
  std::set<Ggp> out;
  for (const auto& [seq, line] : enumerate_ggp_witnessed(polys)) out.insert(seq);
  return out;
}

/// Total edge count of the family.
inline std::size_t family_edge_count(const std::map<std::string, Polygon>& polys) {
  std::size_t edges = 0;
  for (const auto& [id, poly] : polys) edges += poly.size();
  return edges;
}

/// Permutation count never exceeds the cell count of the dual arrangement
/// of 2E lines (each edge dualizes to a double wedge).
inline bool ggp_upper_check(const std::map<std::string, Polygon>& polys) {
  std::size_t e2 = 2 * family_edge_count(polys);
  std::size_t cells = e2 * (e2 - 1) / 2 + e2 + 1;
  return enumerate_ggp(polys).size() <= cells;
}

/// Randomized completeness probe: max over seeded random lines of the
/// permutations seen; every one must already be in `known`.
inline bool ggp_sampling_covered(const std::map<std::string, Polygon>& polys,
                                 const std::set<Ggp>& known, int trials,
                                 std::uint64_t seed) {
  Point lo, hi;
  bool first = true;
  for (const auto& [id, poly] : polys)
    for (const Point& p : poly.vertices) {
      if (first) {
        lo = hi = p;
        first = false;
      }
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
  for (int i = 0; i < trials; ++i) {
    Point a = random_point(), b = random_point();
    if (a == b) continue;
    if (auto seq = transversal_sequence(line_through(a, b), polys))
      if (!known.count(*seq)) return false;
  }
  return true;
}

}  // namespace kconvex
