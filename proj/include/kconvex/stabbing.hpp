#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <variant>
#include <vector>

#include "kconvex/geom.hpp"

namespace kconvex {

// --- concrete-line boundary analysis --------------------------------------

struct TransversalCrossing {
  Rational param;
};
struct Touch {
  Rational param;
};
struct OverlapRun {
  Rational param_start, param_end;
  bool crossing;
};
using LineEvent = std::variant<TransversalCrossing, Touch, OverlapRun>;

inline Rational event_start(const LineEvent& e) {
  return std::visit(
      [](const auto& ev) -> Rational {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, OverlapRun>)
          return ev.param_start;
        else
          return ev.param;
      },
      e);
}

struct LineProfile {
  Line line;
  std::vector<LineEvent> events;  // sorted by start parameter
  std::vector<std::pair<Rational, Rational>> inside_intervals;  // closed, disjoint
  int crossing_count = 0;
};

namespace detail {

/// Maximal cyclic runs of on-line vertices plus plain edge crossings.
/// A run is a crossing iff the boundary sides strictly before and strictly
/// after it differ; contained whole edges never add extra crossings.
template <typename RunFn, typename EdgeCrossFn>
void scan_line_incidences(const Line& line, const Polygon& poly, RunFn on_run,
                          EdgeCrossFn on_edge_cross) {
  const std::size_t n = poly.size();
  std::vector<int> s(n);
  bool any_nonzero = false;
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = sign(line.side(poly.vertices[i]));
    if (s[i] != 0) any_nonzero = true;
  }
  if (!any_nonzero) return;  // cannot happen for a valid polygon
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = (i + 1) % n;
    if (s[i] != 0 && s[j] != 0 && s[i] != s[j]) on_edge_cross(i);
    if (s[i] == 0 && s[(i + n - 1) % n] != 0) {
      // i starts a zero run; find its end.
      std::size_t end = i;
      while (s[(end + 1) % n] == 0) end = (end + 1) % n;
      on_run(i, end, s[(i + n - 1) % n], s[(end + 1) % n]);
    }
  }
}

}  // namespace detail

/// Number of transversal crossings of a concrete line with the boundary.
inline int crossing_count(const Line& line, const Polygon& poly) {
  int count = 0;
  detail::scan_line_incidences(
      line, poly,
      [&](std::size_t, std::size_t, int before, int after) {
        if (before != after) ++count;
      },
      [&](std::size_t) { ++count; });
  return count;
}

/// Full event structure of a line against the boundary, with the closed
/// components of line ∩ polygon as parameter intervals.
inline LineProfile line_profile(const Line& line, const Polygon& poly) {
  LineProfile prof{line, {}, {}, 0};
  detail::scan_line_incidences(
      line, poly,
      [&](std::size_t i, std::size_t end, int before, int after) {
        bool crossing = before != after;
        if (i == end) {
          Rational u = line.param(poly.vertices[i]);
          if (crossing)
            prof.events.push_back(TransversalCrossing{u});
          else
            prof.events.push_back(Touch{u});
        } else {
          Rational lo = line.param(poly.vertices[i]);
          Rational hi = lo;
          for (std::size_t k = i;; k = (k + 1) % poly.size()) {
            Rational u = line.param(poly.vertices[k]);
            lo = std::min(lo, u);
            hi = std::max(hi, u);
            if (k == end) break;
          }
          prof.events.push_back(OverlapRun{lo, hi, crossing});
        }
        if (crossing) ++prof.crossing_count;
      },
      [&](std::size_t i) {
        const Point& a = poly.vertices[i];
        const Point& b = poly.vertex(i + 1);
        Rational sa = line.side(a), sb = line.side(b);
        Rational t = sa / (sa - sb);
        prof.events.push_back(TransversalCrossing{line.param(a + t * (b - a))});
        ++prof.crossing_count;
      });
  std::sort(prof.events.begin(), prof.events.end(),
            [](const LineEvent& a, const LineEvent& b) {
              return event_start(a) < event_start(b);
            });

  // Breakpoints, then midpoint classification per gap; event points are on
  // the boundary, hence in the closed polygon.
  std::vector<Rational> brk;
  for (const LineEvent& e : prof.events) {
    brk.push_back(event_start(e));
    if (const auto* run = std::get_if<OverlapRun>(&e)) brk.push_back(run->param_end);
  }
  std::sort(brk.begin(), brk.end());
  brk.erase(std::unique(brk.begin(), brk.end()), brk.end());
  if (brk.empty()) return prof;

  std::optional<std::pair<Rational, Rational>> open;
  auto flush = [&]() {
    if (open) prof.inside_intervals.push_back(*open);
    open.reset();
  };
  for (std::size_t g = 0; g < brk.size(); ++g) {
    if (!open)
      open = {brk[g], brk[g]};
    else
      open->second = brk[g];
    bool gap_inside = false;
    if (g + 1 < brk.size()) {
      Point mid = line.at((brk[g] + brk[g + 1]) / 2);
      gap_inside = point_in_polygon(mid, poly) != PointLocation::Outside;
    }
    if (gap_inside)
      open->second = brk[g + 1];
    else
      flush();
  }
  flush();
  // Merge intervals produced back to back at shared endpoints.
  std::vector<std::pair<Rational, Rational>> merged;
  for (auto& iv : prof.inside_intervals) {
    if (!merged.empty() && merged.back().second >= iv.first)
      merged.back().second = std::max(merged.back().second, iv.second);
    else
      merged.push_back(iv);
  }
  prof.inside_intervals = std::move(merged);
  return prof;
}

/// Number of connected components of line ∩ polygon (closed sets).
inline int components_on_line(const Line& line, const Polygon& poly) {
  return static_cast<int>(line_profile(line, poly).inside_intervals.size());
}

/// Components of the closed segment xy against the closed polygon.
inline int segment_components(const Point& x, const Point& y, const Polygon& poly) {
  Line line = line_through(x, y);
  Rational lo = line.param(x), hi = line.param(y);
  if (lo > hi) std::swap(lo, hi);
  int count = 0;
  for (const auto& iv : line_profile(line, poly).inside_intervals)
    if (iv.second >= lo && iv.first <= hi) ++count;
  return count;
}

// --- candidate lines via limit perturbations ------------------------------

/// A base line through polygon vertices together with an infinitesimal
/// perturbation direction: the line with direction d + tη·perp(d) translated
/// by sη along the normal, in the limit η → 0⁺. (0,0) is the base line
/// itself. Vertex side signs in the limit are exact lexicographic signs, so
/// candidate evaluation never touches an explicit η.
struct CandidateLine {
  Line base;
  Rational t, s;

  bool is_base() const { return t == 0 && s == 0; }

  /// Limit side sign of p; for off-line points this is the base-line sign,
  /// for on-line points the perturbation decides via the line parameter.
  int limit_side(const Point& p) const {
    Rational f = base.side(p);
    if (f != 0) return sign(f);
    return sign(-t * base.param(p) - s);
  }

  /// A concrete nearby line whose vertex side signs all match the limit
  /// signs of this candidate (verified, shrinking η until they do).
  Line realize(const std::vector<const Polygon*>& polys) const {
    if (is_base()) return base;
    Point d = base.dir.vec();
    Point perp{-d.y, d.x};
    Rational eta(1, 1024);
    for (int iter = 0; iter < 4096; ++iter, eta /= 2) {
      Point d2 = d + (t * eta) * perp;
      if (d2.x == 0 && d2.y == 0) continue;
      Line cand{base.anchor + (s * eta) * perp, Direction(d2.x, d2.y)};
      // Direction normalization may reverse the line's orientation, negating
      // every side sign; accept a globally flipped sign pattern (same line).
      bool ok = true;
      int flip = 0;
      for (const Polygon* poly : polys) {
        for (const Point& v : poly->vertices) {
          int want = limit_side(v), got = sign(cand.side(v));
          if (want == 0 || got == 0) {
            ok = want == got;
          } else {
            if (flip == 0) flip = want * got;
            ok = got == flip * want;
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
      if (ok) return cand;
    }
    throw std::logic_error("candidate realization did not converge");
  }

  Line realize(const Polygon& poly) const { return realize({&poly}); }
};

/// Crossing count of the perturbed line in the limit. For perturbed
/// candidates every vertex has a strict side, so the count is the number of
/// cyclic sign alternations; the base line uses the collinear-run rule.
inline int limit_crossing_count(const CandidateLine& cand, const Polygon& poly) {
  if (cand.is_base()) return crossing_count(cand.base, poly);
  const std::size_t n = poly.size();
  int prev = cand.limit_side(poly.vertices[n - 1]);
  int count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int cur = cand.limit_side(poly.vertices[i]);
    if (cur != prev) ++count;
    prev = cur;
  }
  return count;
}

namespace detail {

/// Perturbation directions (t, s) sampling every sector of the arrangement
/// of the critical lines {t·u + s = 0} for the on-line vertex parameters u,
/// plus the base direction (0,0). Sector interiors correspond to the full
/// dimensional dual cells whose closure contains this base line.
inline std::vector<std::pair<Rational, Rational>> perturbation_directions(
    const std::vector<Rational>& on_line_params) {
  std::vector<std::pair<Rational, Rational>> rays;
  auto add_ray = [&](Rational a, Rational b) { rays.emplace_back(std::move(a), std::move(b)); };
  for (const Rational& u : on_line_params) {
    add_ray(1, -u);
    add_ray(-1, u);
  }
  if (rays.empty()) {
    add_ray(1, 0);
    add_ray(-1, 0);
    add_ray(0, 1);
    add_ray(0, -1);
  }
  auto pseudo_angle_less = [](const std::pair<Rational, Rational>& p,
                              const std::pair<Rational, Rational>& q) {
    auto half = [](const std::pair<Rational, Rational>& v) {
      return (v.second > 0 || (v.second == 0 && v.first > 0)) ? 0 : 1;
    };
    int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    return p.first * q.second - p.second * q.first > 0;
  };
  std::sort(rays.begin(), rays.end(), pseudo_angle_less);
  rays.erase(std::unique(rays.begin(), rays.end(),
                         [](const auto& p, const auto& q) {
                           return p.first * q.second - p.second * q.first == 0 &&
                                  sign(p.first) == sign(q.first) &&
                                  sign(p.second) == sign(q.second);
                         }),
             rays.end());
  std::vector<std::pair<Rational, Rational>> dirs{{0, 0}};
  const std::size_t m = rays.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& r1 = rays[i];
    const auto& r2 = rays[(i + 1) % m];
    Rational crossv = r1.first * r2.second - r1.second * r2.first;
    if (crossv > 0) {
      dirs.emplace_back(r1.first + r2.first, r1.second + r2.second);
    } else {
      // Opposite rays (a single critical line): the sectors are half planes;
      // take the two perpendiculars.
      dirs.emplace_back(-r1.second, r1.first);
      dirs.emplace_back(r1.second, -r1.first);
    }
  }
  return dirs;
}

}  // namespace detail

/// Enumerates candidate lines whose limit evaluations cover every full
/// dimensional cell of the dual arrangement of the given points: all lines
/// through two points with sector perturbations, and the vertical lines
/// through each point likewise perturbed (the vertical-direction fringe).
/// Lines supporting several collinear points are visited once.
template <typename Fn>
void for_each_candidate_line(const std::vector<Point>& points, Fn fn) {
  std::map<std::array<Int, 3>, bool> seen;
  auto visit = [&](const Line& base) {
    if (!seen.emplace(base.canonical(), true).second) return;
    std::vector<Rational> params;
    for (const Point& p : points)
      if (base.contains(p)) params.push_back(base.param(p));
    for (auto& [t, s] : detail::perturbation_directions(params))
      fn(CandidateLine{base, t, s});
  };
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i] != points[j]) visit(line_through(points[i], points[j]));
    visit(Line{points[i], Direction(0, 1)});
  }
}

// --- stabbing number ------------------------------------------------------

struct StabbingCertificate {
  int value = 0;
  Line witness_line{Point{0, 0}, Direction(1, 0)};
};

/// Exact maximum crossing count over all lines, with a witness achieving it.
/// Deterministic: ties resolved by the lexicographically smallest
/// (canonical base line, t, s) candidate.
inline StabbingCertificate stabbing_number(const Polygon& poly) {
  std::optional<CandidateLine> best;
  std::array<Int, 3> best_key{};
  int best_count = -1;
  for_each_candidate_line(poly.vertices, [&](const CandidateLine& cand) {
    int c = limit_crossing_count(cand, poly);
    if (c < best_count) return;
    auto key = cand.base.canonical();
    if (c > best_count ||
        std::tie(key, cand.t, cand.s) < std::tie(best_key, best->t, best->s)) {
      best = cand;
      best_key = key;
      best_count = c;
    }
  });
  StabbingCertificate cert;
  cert.value = best_count;
  cert.witness_line = best->realize(poly);
  return cert;
}

/// True iff no line meets the polygon in more than k components.
inline bool is_k_convex(const Polygon& poly, int k) {
  return stabbing_number(poly).value <= 2 * k;
}

/// Randomized lower bound: max crossing count over `trials` lines through
/// random rational point pairs in a box twice the polygon's extent.
inline int stabbing_oracle(const Polygon& poly, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto [lo, hi] = poly.bounding_box();
  Rational wx = hi.x - lo.x, wy = hi.y - lo.y;
  if (wx == 0) wx = 1;
  if (wy == 0) wy = 1;
  std::uniform_int_distribution<int> grid(0, 1 << 16);
  auto random_point = [&]() -> Point {
    Rational fx(grid(rng), 1 << 16), fy(grid(rng), 1 << 16);
    return {lo.x - wx / 2 + fx * 2 * wx, lo.y - wy / 2 + fy * 2 * wy};
  };
  int best = 0;
  for (int i = 0; i < trials; ++i) {
    Point a = random_point(), b = random_point();
    if (a == b) continue;
    best = std::max(best, crossing_count(line_through(a, b), poly));
  }
  return best;
}

}  // namespace kconvex
