#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "kconvex/geom.hpp"
#include "kconvex/stabbing.hpp"

namespace kconvex {

// --- boundary positions ----------------------------------------------------

/// Position on the boundary: parameter t in [0,1) along edge `edge`
/// (t = 0 is the edge's source vertex). Ordered cyclically by (edge, t).
struct BoundaryPos {
  std::size_t edge = 0;
  Rational t = 0;

  bool operator==(const BoundaryPos&) const = default;
  bool operator<(const BoundaryPos& o) const {
    return edge != o.edge ? edge < o.edge : t < o.t;
  }
};

inline BoundaryPos vertex_pos(const Polygon& poly, std::size_t v) {
  return {v % poly.size(), Rational(0)};
}

inline Point boundary_point(const Polygon& poly, const BoundaryPos& pos) {
  const Point& a = poly.vertices[pos.edge];
  const Point& b = poly.vertex(pos.edge + 1);
  return a + pos.t * (b - a);
}

/// Counterclockwise arc from `start` to `end` (cyclic; closed at both ends).
struct BoundaryArc {
  BoundaryPos start, end;
};

// --- ray shooting ----------------------------------------------------------

struct RayHit {
  BoundaryPos pos;
  Point point;
  Rational ray_t;  // parameter along the ray, > 0
};

/// The ray lies along a boundary edge, so hit order is ill-defined; callers
/// abandon the characterization path and use the stabbing oracle instead.
class DegenerateOverlap : public std::runtime_error {
 public:
  explicit DegenerateOverlap(std::size_t edge)
      : std::runtime_error("ray overlaps polygon edge " + std::to_string(edge)),
        edge_(edge) {}
  std::size_t edge() const { return edge_; }

 private:
  std::size_t edge_;
};

/// All intersections of the open ray (t > 0) with the boundary, nearest
/// first. A hit at a polygon vertex is reported once (as t = 0 of the
/// outgoing edge). Throws DegenerateOverlap when the ray runs along an edge.
inline std::vector<RayHit> ray_hits(const Ray& r, const Polygon& poly) {
  std::vector<RayHit> hits;
  const std::size_t n = poly.size();
  for (std::size_t j = 0; j < n; ++j) {
    const Point& a = poly.vertices[j];
    const Point& b = poly.vertex(j + 1);
    Point e = b - a;
    Rational den = cross(r.dir, e);
    if (den == 0) {
      if (cross(a - r.origin, r.dir) != 0) continue;  // parallel, off the line
      // Collinear: degenerate only if some part of the edge lies strictly
      // ahead of the origin (an edge behind the origin, e.g. the edge whose
      // extension the ray is, is harmless).
      Rational d2 = dot(r.dir, r.dir);
      Rational ta = dot(a - r.origin, r.dir) / d2;
      Rational tb = dot(b - r.origin, r.dir) / d2;
      if (std::max(ta, tb) > 0) throw DegenerateOverlap(j);
      continue;
    }
    Rational t = cross(a - r.origin, e) / den;
    Rational s = cross(a - r.origin, r.dir) / den;
    if (t > 0 && 0 <= s && s < 1) hits.push_back({{j, s}, a + s * e, t});
  }
  std::sort(hits.begin(), hits.end(),
            [](const RayHit& x, const RayHit& y) { return x.ray_t < y.ray_t; });
  return hits;
}

/// The two edge-extension rays at vertex v: each incident edge prolonged
/// beyond v. At a reflex vertex both point into the interior.
inline std::array<Ray, 2> extension_rays(const Polygon& poly, std::size_t v) {
  const Point& p = poly.vertices[v];
  return {Ray{p, p - poly.vertex(poly.prev(v))}, Ray{p, p - poly.vertex(v + 1)}};
}

inline std::vector<std::size_t> reflex_vertices(const Polygon& poly) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (vertex_kind(poly, i) == VertexKind::Reflex) out.push_back(i);
  return out;
}

// --- critical ranges -------------------------------------------------------

/// The boundary wiggled out of the shape the sliding-scan characterization
/// assumes (e.g. a tangency region not ending at a ray hit); callers fall
/// back to the stabbing oracle.
class CharacterizationBreakdown : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tangency region of a reflex vertex v: boundary positions x such that the
/// line through v and x leaves both neighbors of v on one closed side.
/// Stored as two arcs, each the connected component of that sign region
/// containing the hit of one edge-extension ray (the hit is an endpoint of
/// its component). The two components may coincide — e.g. for a single notch
/// in a convex blob they merge into one arc running through v itself — and
/// each carries the cyclic vertex-index interval [lo, hi] it covers.
struct CriticalRange {
  std::size_t vertex = 0;
  std::array<BoundaryArc, 2> arcs;
  std::array<std::pair<std::size_t, std::size_t>, 2> vertex_ranges;
};

namespace detail {

/// True when idx lies in the cyclic inclusive vertex interval [lo, hi].
inline bool in_cyclic_range(std::size_t idx, std::size_t lo, std::size_t hi) {
  return lo <= hi ? (lo <= idx && idx <= hi) : (idx >= lo || idx <= hi);
}

/// Sign product f(x)*g(x) of the two tangency orientation tests at v.
struct TangencySigns {
  Point v, pv, nv;  // vertex and neighbor offsets prev - v, next - v

  Rational h(const Point& x) const {
    return cross(x - v, pv) * cross(x - v, nv);
  }

  /// On edge a->b parameterized by s, f and g are linear in s; returns
  /// their roots within (0,1), ascending.
  std::vector<Rational> roots_on_edge(const Point& a, const Point& b) const {
    std::vector<Rational> rs;
    for (const Point& w : {pv, nv}) {
      Rational c0 = cross(a - v, w), c1 = cross(b - a, w);
      if (c1 == 0) continue;
      Rational root = -c0 / c1;
      if (root > 0 && root < 1) rs.push_back(root);
    }
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    return rs;
  }
};

}  // namespace detail

/// Computes C(v) as the two connected components of the tangency sign region
/// that contain the two extension-ray hits, found by expanding from each hit
/// along the boundary until the sign product goes negative. Requires both
/// rays to have exactly one hit each.
inline CriticalRange critical_range(const Polygon& poly, std::size_t v) {
  const std::size_t n = poly.size();
  auto rays = extension_rays(poly, v);
  std::array<BoundaryPos, 2> hit_pos;
  for (int r = 0; r < 2; ++r) {
    auto hits = ray_hits(rays[r], poly);
    if (hits.size() != 1)
      throw CharacterizationBreakdown("extension ray without a unique hit");
    hit_pos[r] = hits[0].pos;
  }
  detail::TangencySigns ts{poly.vertices[v], poly.vertex(poly.prev(v)) - poly.vertices[v],
                           poly.vertex(v + 1) - poly.vertices[v]};

  // Farthest position reachable from `seed` with the sign product staying
  // nonnegative, moving counterclockwise (forward) or clockwise.
  auto expand = [&](const BoundaryPos& seed, bool backward) -> BoundaryPos {
    for (std::size_t step = 0; step <= n; ++step) {
      std::size_t edge = backward ? (seed.edge + n - step) % n : (seed.edge + step) % n;
      const Point& a = poly.vertices[edge];
      const Point& b = poly.vertex(edge + 1);
      std::vector<Rational> brk = ts.roots_on_edge(a, b);
      brk.insert(brk.begin(), Rational(0));
      brk.push_back(Rational(1));
      if (step == 0) {
        // Clip the first edge to the part at or beyond the seed.
        std::erase_if(brk, [&](const Rational& x) {
          return backward ? x > seed.t : x < seed.t;
        });
        if (backward) brk.push_back(seed.t);
        else brk.insert(brk.begin(), seed.t);
      }
      brk.erase(std::unique(brk.begin(), brk.end()), brk.end());
      if (backward) std::reverse(brk.begin(), brk.end());
      for (std::size_t i = 0; i + 1 < brk.size(); ++i) {
        Point mid = a + ((brk[i] + brk[i + 1]) / 2) * (b - a);
        if (ts.h(mid) < 0) {
          Rational stop = brk[i];
          if (!backward && stop == 1) return BoundaryPos{(edge + 1) % n, Rational(0)};
          if (backward && stop == 1) return BoundaryPos{(edge + 1) % n, Rational(0)};
          return BoundaryPos{edge, stop};
        }
      }
    }
    throw CharacterizationBreakdown("tangency region wraps the whole boundary");
  };

  CriticalRange out;
  out.vertex = v;
  for (int r = 0; r < 2; ++r) {
    BoundaryPos lo = expand(hit_pos[r], true);
    BoundaryPos hi = expand(hit_pos[r], false);
    out.arcs[r] = {lo, hi};
    // Vertex-index interval: vertex w is covered when position (w, 0) lies
    // in the arc. An arc starting mid-edge first covers the edge's target
    // vertex; an arc ending mid-edge still covers its edge's source vertex.
    std::size_t first = lo.t == 0 ? lo.edge : (lo.edge + 1) % n;
    std::size_t last = hi.edge;
    if (lo == hi) last = first = lo.t == 0 ? lo.edge : n;  // single point
    if (first == n) {
      // Mid-edge single point: covers no vertex; encode as empty via an
      // impossible range.
      out.vertex_ranges[r] = {n, n};
    } else {
      out.vertex_ranges[r] = {first, last};
    }
  }
  return out;
}

inline bool critical_range_covers(const CriticalRange& cr, std::size_t w) {
  return detail::in_cyclic_range(w, cr.vertex_ranges[0].first, cr.vertex_ranges[0].second) ||
         detail::in_cyclic_range(w, cr.vertex_ranges[1].first, cr.vertex_ranges[1].second);
}

// --- inner tangents --------------------------------------------------------

namespace detail {

/// Largest crossing count achievable by lines infinitesimally close to
/// `base` (including base itself under the overlap-run rule).
inline int max_crossing_near_line(const Line& base, const Polygon& poly) {
  std::vector<Rational> params;
  for (const Point& p : poly.vertices)
    if (base.side(p) == 0) params.push_back(base.param(p));
  int best = crossing_count(base, poly);
  for (auto& [t, s] : perturbation_directions(params)) {
    CandidateLine cand{base, t, s};
    best = std::max(best, limit_crossing_count(cand, poly));
  }
  return best;
}

/// Confirms that reflex vertices v, w form an inner tangent: the segment vw
/// stays inside the polygon, and lines near the tangent line cross the
/// boundary at least 6 times.
inline bool inner_tangent_certified(const Polygon& poly, std::size_t v, std::size_t w) {
  const std::size_t n = poly.size();
  if (v == w || (v + 1) % n == w || (w + 1) % n == v) return false;
  const Point& a = poly.vertices[v];
  const Point& b = poly.vertices[w];
  if (segment_components(a, b, poly) != 1) return false;
  return max_crossing_near_line(line_through(a, b), poly) >= 6;
}

}  // namespace detail

/// All-pairs reference implementation of the inner-tangent search.
inline std::optional<std::pair<std::size_t, std::size_t>> find_inner_tangent_bruteforce(
    const Polygon& poly, const std::vector<CriticalRange>& ranges) {
  for (std::size_t i = 0; i < ranges.size(); ++i)
    for (std::size_t j = i + 1; j < ranges.size(); ++j) {
      std::size_t v = ranges[i].vertex, w = ranges[j].vertex;
      if (critical_range_covers(ranges[i], w) && critical_range_covers(ranges[j], v) &&
          detail::inner_tangent_certified(poly, v, w))
        return std::make_pair(v, w);
    }
  return std::nullopt;
}

/// Sliding-scan inner-tangent search: walk a position around the boundary
/// through the sorted event set, maintain the set of reflex vertices whose
/// tangency region contains the current position in an ordered index set,
/// and at each reflex vertex query that set against the vertex-index
/// intervals of its own region. Arc openings are processed before vertex
/// queries before closings, so arcs behave as closed sets.
inline std::optional<std::pair<std::size_t, std::size_t>> find_inner_tangent(
    const Polygon& poly, const std::vector<CriticalRange>& ranges) {
  enum Kind { Open = 0, Query = 1, Close = 2 };
  struct Event {
    BoundaryPos pos;
    Kind kind;
    std::size_t vertex;
  };
  std::vector<Event> events;
  for (const CriticalRange& cr : ranges) {
    for (const BoundaryArc& arc : cr.arcs) {
      events.push_back({arc.start, Open, cr.vertex});
      events.push_back({arc.end, Close, cr.vertex});
    }
    events.push_back({vertex_pos(poly, cr.vertex), Query, cr.vertex});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.pos != b.pos) return a.pos < b.pos;
    return a.kind < b.kind;
  });

  std::map<std::size_t, const CriticalRange*> by_vertex;
  for (const CriticalRange& cr : ranges) by_vertex[cr.vertex] = &cr;

  // The two arcs of one range may overlap, so activation is counted; the
  // ordered set holds vertices with a positive count.
  std::map<std::size_t, int> depth;
  std::set<std::size_t> active;
  auto open = [&](std::size_t v) {
    if (++depth[v] == 1) active.insert(v);
  };
  auto close = [&](std::size_t v) {
    auto it = depth.find(v);
    if (it == depth.end() || it->second == 0) return;  // first-pass tail arc
    if (--it->second == 0) active.erase(v);
  };
  std::optional<std::pair<std::size_t, std::size_t>> found;
  auto query_interval = [&](std::size_t self, std::size_t lo, std::size_t hi) {
    for (auto it = active.lower_bound(lo); it != active.end() && *it <= hi; ++it) {
      if (*it == self) continue;
      if (critical_range_covers(*by_vertex[*it], self) &&
          detail::inner_tangent_certified(poly, self, *it)) {
        found = std::make_pair(std::min(self, *it), std::max(self, *it));
        return;
      }
    }
  };
  const std::size_t n = poly.size();
  // Two passes: the first seeds arcs that wrap past the start position, the
  // second answers queries against the complete active set.
  for (int pass = 0; pass < 2 && !found; ++pass) {
    for (const Event& e : events) {
      if (e.kind == Open) open(e.vertex);
      else if (e.kind == Close) close(e.vertex);
      else if (pass == 1) {
        const CriticalRange& cr = *by_vertex[e.vertex];
        for (const auto& [lo, hi] : cr.vertex_ranges) {
          if (lo <= hi) {
            query_interval(e.vertex, lo, hi);
          } else {
            query_interval(e.vertex, lo, n - 1);
            if (!found) query_interval(e.vertex, 0, hi);
          }
          if (found) break;
        }
      }
      if (found) break;
    }
  }
  return found;
}

// --- inflection-edge stabbers ----------------------------------------------

/// Searches every inflection edge (joining a convex and a reflex vertex) for
/// a supporting line crossing the boundary at least 3 times, not counting
/// the collinear run that contains the edge itself.
inline std::optional<std::pair<std::size_t, Line>> inflection_stabber_exists(
    const Polygon& poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    VertexKind ka = vertex_kind(poly, i);
    VertexKind kb = vertex_kind(poly, (i + 1) % n);
    if (ka == kb) continue;
    const Point& a = poly.vertices[i];
    const Point& b = poly.vertex(i + 1);
    Line line = line_through(a, b);
    LineProfile prof = line_profile(line, poly);
    Rational ea = line.param(a), eb = line.param(b);
    if (ea > eb) std::swap(ea, eb);
    int count = 0;
    for (const LineEvent& ev : prof.events) {
      if (const auto* tc = std::get_if<TransversalCrossing>(&ev)) {
        (void)tc;
        ++count;
      } else if (const auto* run = std::get_if<OverlapRun>(&ev)) {
        if (!run->crossing) continue;
        // Skip the run that contains this edge.
        if (run->param_start <= ea && eb <= run->param_end) continue;
        ++count;
      }
    }
    if (count >= 3) return std::make_pair(i, line);
  }
  return std::nullopt;
}

// --- recognizer ------------------------------------------------------------

struct MultiHitRay {
  std::size_t vertex;
  Ray ray;
  std::vector<RayHit> hits;
};
struct InnerTangent {
  std::size_t v, w;
};
struct InflectionStabber {
  std::size_t edge;
  Line line;
};
using TwoConvexWitness =
    std::variant<std::monostate, MultiHitRay, InnerTangent, InflectionStabber>;

struct TwoConvexVerdict {
  bool is_two_convex = false;
  TwoConvexWitness witness;
  bool used_oracle_fallback = false;
};

/// Decides 2-convexity by the three-part characterization: no extension ray
/// hits the boundary twice, no pair of reflex vertices admits an inner
/// tangent, and no inflection edge lies on a 3-stabber. Degenerate inputs
/// fall back to the exact stabbing computation.
inline TwoConvexVerdict recognize_2convex(const Polygon& poly) {
  auto oracle = [&]() {
    TwoConvexVerdict v;
    v.is_two_convex = is_k_convex(poly, 2);
    v.used_oracle_fallback = true;
    return v;
  };
  std::vector<std::size_t> reflex = reflex_vertices(poly);
  try {
    for (std::size_t v : reflex) {
      for (const Ray& r : extension_rays(poly, v)) {
        auto hits = ray_hits(r, poly);
        if (hits.size() >= 2)
          return {false, MultiHitRay{v, r, std::move(hits)}, false};
      }
    }
    std::vector<CriticalRange> ranges;
    ranges.reserve(reflex.size());
    for (std::size_t v : reflex) ranges.push_back(critical_range(poly, v));
    if (auto pair = find_inner_tangent(poly, ranges))
      return {false, InnerTangent{pair->first, pair->second}, false};
    if (auto stab = inflection_stabber_exists(poly))
      return {false, InflectionStabber{stab->first, stab->second}, false};
    return {true, std::monostate{}, false};
  } catch (const DegenerateOverlap&) {
    return oracle();
  } catch (const CharacterizationBreakdown&) {
    return oracle();
  }
}

}  // namespace kconvex
