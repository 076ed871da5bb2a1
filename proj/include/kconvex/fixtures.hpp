#pragma once

#include <climits>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "kconvex/geom.hpp"
#include "kconvex/stabbing.hpp"
#include "kconvex/twoconvex.hpp"

namespace kconvex::fixtures {

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator parameter outside its documented range.
class ParamOutOfRange : public FixtureError {
 public:
  using FixtureError::FixtureError;
};

/// A generated instance failed its own defining-property assertion; the
/// construction recipe is buggy and nothing is returned.
class PropertyAssertionFailed : public FixtureError {
 public:
  using FixtureError::FixtureError;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw PropertyAssertionFailed("fixture property assertion failed: " + what);
}

inline void require_param(bool cond, const std::string& what) {
  if (!cond) throw ParamOutOfRange("fixture parameter out of range: " + what);
}

inline Point ipt(long x, long y) { return {Rational(x), Rational(y)}; }

/// Convex polygon: n-1 points on a concave arc plus the closing edge.
inline Polygon convex_ngon(int n) {
  require_param(n >= 3, "convex_ngon needs n >= 3");
  std::vector<Point> v;
  long m = n - 1;
  for (long i = 0; i < m; ++i) v.push_back(ipt(i, i * (m - 1 - i)));
  v.push_back({Rational(m - 1, 2), Rational(-m)});
  return validate_polygon(std::move(v));
}

/// Convex polygon with n vertices on the unit circle (rational points via
/// the tangent half-angle map), scaled by `radius`. Rounder than
/// convex_ngon; the arc not covered closes with one long edge.
inline Polygon circle_polygon(int n, long radius = 100) {
  require_param(n >= 3, "circle_polygon needs n >= 3");
  std::vector<Point> v;
  for (long j = 0; j < n; ++j) {
    Rational t = Rational(-3) + Rational(6 * j, n - 1);
    Rational den = 1 + t * t;
    v.push_back({radius * (1 - t * t) / den, radius * 2 * t / den});
  }
  return validate_polygon(std::move(v));
}

/// Comb with k tines pointing right; stabbing number exactly 2k (a vertical
/// line through the tines crosses all 2k long tine edges). The spine is a
/// shallow convex trapezoid so no line can enter it sideways and pick up
/// extra crossings. With n > 4k+2 the extra vertices subdivide the 2k long
/// tine edges along slightly bowed arcs (no three collinear); traversing the
/// boundary then yields ~2k x-overlapping monotone runs, so x-sorting the
/// vertices is a k-way merge.
inline Polygon comb(int k, int n = 0) {
  require_param(k >= 1, "comb needs k >= 1");
  const int base = 4 * k + 2;
  if (n == 0) n = base;
  require_param(n >= base, "comb needs n >= 4k+2");
  // Build with tines pointing up, subdividing the 2k vertical walls, then
  // rotate (x,y) -> (y,-x) so the tines point right.
  const long extra = n - base, walls = 2 * k;
  long wall_done = 0;
  auto subdivide = [&](std::vector<Point>& v, Point a, Point b) {
    long p = extra / walls + (wall_done < extra % walls ? 1 : 0);
    ++wall_done;
    // Inward x-bulge on a parabola: interior is left of a->b for CCW.
    Rational lean = b.y > a.y ? Rational(-1, 8) : Rational(1, 8);
    for (long j = 1; j <= p; ++j) {
      Rational t(j, p + 1);
      v.push_back({a.x + lean * 4 * t * (1 - t), a.y + t * (b.y - a.y)});
    }
  };
  std::vector<Point> v{ipt(0, 0),
                       {Rational(1, 4), Rational(-1)},
                       {Rational(2 * k - 1) - Rational(1, 4), Rational(-1)},
                       ipt(2 * k - 1, 0)};
  for (long i = k - 1; i >= 0; --i) {
    subdivide(v, v.back(), ipt(2 * i + 1, 10));  // right wall of tine i
    v.push_back(ipt(2 * i + 1, 10));
    v.push_back(ipt(2 * i, 10));
    Point foot = i > 0 ? ipt(2 * i, 1) : ipt(0, 0);
    subdivide(v, v.back(), foot);  // left wall of tine i
    if (i > 0) {
      v.push_back(foot);
      v.push_back(ipt(2 * i - 1, 1));
    }
  }
  for (Point& p : v) p = {p.y, -p.x};
  Polygon p = validate_polygon(std::move(v));
  require(crossing_count(Line{{Rational(5), Rational(0)}, Direction(0, 1)}, p) == 2 * k,
          "comb tine line");
  return p;
}

/// Pseudo-triangle: three convex corners joined by reflex chains with
/// `chain_len` interior vertices each, bulging toward the centroid.
inline Polygon pseudo_triangle(int chain_len) {
  require_param(chain_len >= 1, "pseudo_triangle needs chain_len >= 1");
  const Point corners[3] = {ipt(0, 0), ipt(36, 0), ipt(18, 30)};
  Point g{(corners[0].x + corners[1].x + corners[2].x) / 3,
          (corners[0].y + corners[1].y + corners[2].y) / 3};
  std::vector<Point> v;
  long m = chain_len;
  for (int side = 0; side < 3; ++side) {
    const Point& a = corners[side];
    const Point& b = corners[(side + 1) % 3];
    v.push_back(a);
    // Quadratic Bezier arc with control point pulled halfway toward the
    // centroid: constant curvature sign keeps every interior vertex reflex.
    Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
    Point c = mid + Rational(1, 2) * (g - mid);
    for (long j = 1; j <= m; ++j) {
      Rational s(j, m + 1), u = 1 - Rational(j, m + 1);
      v.push_back(u * u * a + (2 * s * u) * c + (s * s) * b);
    }
  }
  Polygon p = validate_polygon(std::move(v));
  int convex = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (vertex_kind(p, i) == VertexKind::Convex) ++convex;
  require(convex == 3, "pseudo_triangle must have exactly 3 convex vertices");
  return p;
}

/// Rectangle with `spikes` thin triangular spikes on its top edge
/// (Figure-2-style): each apex is convex with two reflex base neighbors.
inline Polygon spike_rect(int spikes) {
  require_param(spikes >= 1, "spike_rect needs spikes >= 1");
  long s = spikes;
  std::vector<Point> v{ipt(0, 0), ipt(4 * s, 0), ipt(4 * s, 4)};
  for (long i = s - 1; i >= 0; --i) {
    v.push_back(ipt(4 * i + 3, 4));
    v.push_back(ipt(4 * i + 2, 9));
    v.push_back(ipt(4 * i + 1, 4));
  }
  v.push_back(ipt(0, 4));
  return validate_polygon(std::move(v));
}

/// Star-shaped fan of m thin spikes over a shallow base; stabbing number
/// exactly 2m (a near-horizontal line just above the spike bases crosses
/// every spike).
inline Polygon spiky_star(int m) {
  require_param(m >= 2, "spiky_star needs m >= 2");
  std::vector<Point> v{ipt(0, -2)};
  Point view = ipt(0, -1);
  for (long i = m - 1; i >= 0; --i) {
    long b = 2 * i - m;  // spike base [b, b+1] on y = 0
    v.push_back(ipt(b + 1, 0));
    Point center{Rational(2 * b + 1, 2), Rational(0)};
    v.push_back(view + Rational(12) * (center - view));
    v.push_back(ipt(b, 0));
  }
  Polygon p = validate_polygon(std::move(v));
  Line probe{{Rational(0), Rational(1, 2)}, Direction(1, 0)};
  require(crossing_count(probe, p) == 2 * m, "spiky_star probe line");
  return p;
}

/// 2-convex polygon with n/2 pockets: a convex m-gon with every edge
/// midpoint dented toward the centroid.
inline Polygon many_pockets(int m) {
  require_param(m >= 3, "many_pockets needs m >= 3");
  Polygon base = circle_polygon(m);
  Rational gx = 0, gy = 0;
  for (const Point& p : base.vertices) {
    gx += p.x;
    gy += p.y;
  }
  Point g{gx / m, gy / m};
  std::vector<Point> v;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const Point& a = base.vertices[i];
    const Point& b = base.vertex(i + 1);
    v.push_back(a);
    Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
    v.push_back(mid + Rational(1, 10) * (g - mid));
  }
  Polygon p = validate_polygon(std::move(v));
  for (std::size_t i = 0; i < p.size(); ++i)
    require((vertex_kind(p, i) == VertexKind::Reflex) == (i % 2 == 1),
            "many_pockets alternation");
  return p;
}

/// 2-convex polygon with n = 2k^2 vertices and exactly k hull vertices,
/// whose boundary decomposes into 2k convex chains of k vertices each. Every
/// hull edge carries a pocket traced by two quadratic Bezier arcs: a
/// left-turning (convex) arc of k vertices followed by a right-turning
/// (reflex) arc of k vertices. The pocket depth is auto-tuned: deeper
/// pockets eventually self-intersect or admit an inner tangent.
inline Polygon amoeba(int k) {
  require_param(k >= 3, "amoeba needs k >= 3");
  Polygon base = circle_polygon(k, 1000);
  auto bez = [](const Point& p0, const Point& c, const Point& p1, Rational s) {
    Rational u = 1 - s;
    return u * u * p0 + (2 * s * u) * c + (s * s) * p1;
  };
  for (long den : {16L, 32L, 64L, 128L, 256L}) {
    Rational d(1, den);
    std::vector<Point> out;
    for (int i = 0; i < k; ++i) {
      Point a = base.vertices[i], b = base.vertex(i + 1);
      Point v = b - a, w{-v.y, v.x};
      auto local = [&](Rational s, Rational t) { return a + s * v + t * w; };
      Point deep = local(Rational(11, 20), d);
      Point c1 = local(Rational(3, 10), d / 2);
      Point c2 = local(Rational(29, 50), d * 9 / 5);
      for (int j = 0; j < k; ++j) out.push_back(bez(a, c1, deep, Rational(j, k - 1)));
      for (int j = 1; j <= k; ++j) out.push_back(bez(deep, c2, b, Rational(j, k + 1)));
    }
    try {
      Polygon p = validate_polygon(std::move(out));
      bool ok = true;
      for (std::size_t idx = 0; idx < p.size() && ok; ++idx) {
        bool expect_reflex = (idx % (2 * std::size_t(k))) >= std::size_t(k);
        ok = (vertex_kind(p, idx) == VertexKind::Reflex) == expect_reflex;
      }
      if (!ok) continue;
      if (convex_hull(p.vertices).size() != std::size_t(k)) continue;
      if (!recognize_2convex(p).is_two_convex) continue;
      return p;
    } catch (const PolygonError&) {
      continue;
    }
  }
  throw FixtureError("amoeba: no pocket depth satisfied all properties");
}

/// Simple polygon on n distinct random grid points, grown by inserting each
/// point into a boundary edge that keeps the polygon simple. Deterministic
/// per seed.
inline Polygon random_simple_polygon(int n, std::uint64_t seed) {
  require_param(n >= 3, "random_simple_polygon needs n >= 3");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::uniform_int_distribution<long> coord(0, 8L * n);
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
      Point p = ipt(coord(rng), coord(rng));
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    std::vector<Point> poly;
    auto ok_simple = [&](const std::vector<Point>& w) {
      try {
        validate_polygon(w);
        return true;
      } catch (const PolygonError&) {
        return false;
      }
    };
    std::size_t base = 0;
    while (base + 2 < pts.size() &&
           orientation(pts[base], pts[base + 1], pts[base + 2]) == Orientation::Collinear)
      ++base;
    if (base + 2 >= pts.size()) continue;
    poly = {pts[0], pts[1], pts[2]};
    if (!ok_simple(poly)) continue;
    bool failed = false;
    for (std::size_t next = 3; next < pts.size() && !failed; ++next) {
      bool placed = false;
      for (std::size_t e = 0; e < poly.size() && !placed; ++e) {
        std::vector<Point> trial = poly;
        trial.insert(trial.begin() + e + 1, pts[next]);
        if (ok_simple(trial)) {
          poly = std::move(trial);
          placed = true;
        }
      }
      if (!placed) failed = true;
    }
    if (!failed) return validate_polygon(poly);
  }
  throw FixtureError("random_simple_polygon: no valid polygon found");
}

/// Rebuilds the polygon with every vertex mapped through `f` (any affine
/// map; validate_polygon restores CCW orientation after reflections).
template <typename F>
inline Polygon transform(const Polygon& p, F f) {
  std::vector<Point> v;
  for (const Point& q : p.vertices) v.push_back(f(q));
  return validate_polygon(std::move(v));
}

namespace detail {

/// Tines-up comb whose tines span the given closed x-intervals (sorted,
/// disjoint, positive gaps): shallow convex trapezoid body below y = 0, gap
/// floors at y = 1, flat tine tips at y = tip. Stabbing number exactly
/// 2 * #tines, asserted.
inline Polygon comb_over(const std::vector<std::pair<Rational, Rational>>& tines,
                         long tip = 8) {
  const std::size_t k = tines.size();
  require_param(k >= 1 && tip > 1, "comb_over needs >= 1 tine and tip > 1");
  for (std::size_t i = 0; i < k; ++i) {
    require_param(tines[i].first < tines[i].second, "comb_over tine width");
    if (i > 0) require_param(tines[i - 1].second < tines[i].first, "comb_over tine order");
  }
  Rational lo = tines.front().first, hi = tines.back().second, q(1, 4);
  std::vector<Point> v{{lo, Rational(0)},
                       {lo + q, Rational(-1)},
                       {hi - q, Rational(-1)},
                       {hi, Rational(0)}};
  for (std::size_t i = k; i-- > 0;) {
    v.push_back({tines[i].second, Rational(tip)});
    v.push_back({tines[i].first, Rational(tip)});
    if (i > 0) {
      v.push_back({tines[i].first, Rational(1)});
      v.push_back({tines[i - 1].second, Rational(1)});
    }
  }
  Polygon p = validate_polygon(std::move(v));
  require(stabbing_number(p).value == static_cast<int>(2 * k), "comb_over stabbing number");
  return p;
}

inline std::vector<std::pair<Rational, Rational>> unit_tines(int count, long offset) {
  std::vector<std::pair<Rational, Rational>> out;
  for (long i = 0; i < count; ++i)
    out.emplace_back(Rational(offset + 2 * i), Rational(offset + 2 * i + 1));
  return out;
}

}  // namespace detail

/// Disjoint pair of upward combs with k and m tines side by side: the
/// horizontal line y = 5 meets the union in k + m components, the maximum a
/// union of a k-convex and an m-convex set can reach.
inline std::vector<Polygon> aligned_comb_union(int k, int m) {
  require_param(k >= 1 && m >= 1, "aligned_comb_union needs k, m >= 1");
  Polygon a = detail::comb_over(detail::unit_tines(k, 0));
  Polygon b = detail::comb_over(detail::unit_tines(m, 2 * k + 2));
  Line probe{{Rational(0), Rational(5)}, Direction(1, 0)};
  require(crossing_count(probe, a) == 2 * k && crossing_count(probe, b) == 2 * m,
          "aligned_comb_union probe line");
  return {a, b};
}

/// Interlocking pair: an upward k-tine comb and a downward m-tine comb whose
/// tine cross-sections on y = 5 alternate with single overlaps, so the
/// intersection meets that line in k + m - 1 components — the most the
/// intersection of a k-convex and an m-convex set allows.
inline std::vector<Polygon> facing_combs(int k, int m) {
  require_param(k >= 1 && m >= 1 && std::abs(k - m) <= 1,
                "facing_combs needs k, m >= 1 with |k - m| <= 1");
  // Merge the two tine lists alternately; slot t covers [2t, 2t+3], so
  // consecutive slots overlap in a unit interval and same-family slots stay
  // disjoint.
  std::vector<std::pair<Rational, Rational>> up, down;
  for (int t = 0; t < k + m; ++t) {
    auto& side = (t % 2 == (k >= m ? 0 : 1)) ? up : down;
    side.emplace_back(Rational(2 * t), Rational(2 * t + 3));
  }
  Polygon a = detail::comb_over(up);
  Polygon b = transform(detail::comb_over(down),
                        [](const Point& p) { return Point{p.x, 10 - p.y}; });
  Line probe{{Rational(0), Rational(5)}, Direction(1, 0)};
  require(crossing_count(probe, a) == 2 * k && crossing_count(probe, b) == 2 * m,
          "facing_combs probe line");
  return {a, b};
}

/// Family of m overlapping k-tine combs over a common span whose unit gaps
/// are staggered (member j owns every m-th gap slot): on y = 5 each member
/// removes its k - 1 gaps from the span, so the family intersection has
/// m(k-1) + 1 components there, the most m k-convex sets allow.
inline std::vector<Polygon> stacked_combs(int k, int m) {
  require_param(k >= 1 && m >= 1, "stacked_combs needs k, m >= 1");
  const long slots = static_cast<long>(m) * (k - 1);
  const Rational span(2 * slots + 1);
  std::vector<Polygon> out;
  for (int j = 0; j < m; ++j) {
    std::vector<std::pair<Rational, Rational>> tines;
    Rational prev(0);
    for (long s = j; s < slots; s += m) {  // gap slot s covers [2s+1, 2s+2]
      tines.emplace_back(prev, Rational(2 * s + 1));
      prev = Rational(2 * s + 2);
    }
    tines.emplace_back(prev, span);
    require(tines.size() == static_cast<std::size_t>(k), "stacked_combs tine count");
    out.push_back(detail::comb_over(tines));
  }
  return out;
}

/// Thin 2-convex rings: each member follows the boundary of a convex m-gon
/// with one edge removed and the adjacent edge ends trimmed, thickened
/// toward the centroid. Any m - 1 members share band points on the missing
/// member's edge; all m together share nothing. Trim/thickness start at
/// 1/(10 m^2) and halve until every member is 2-convex.
inline std::vector<Polygon> helly_family(int m) {
  require_param(m >= 3, "helly_family needs m >= 3");
  Polygon base = circle_polygon(m, 100);
  Rational gx = 0, gy = 0;
  for (const Point& p : base.vertices) {
    gx += p.x;
    gy += p.y;
  }
  Point o{gx / m, gy / m};
  for (int halve = 0; halve < 8; ++halve) {
    Rational t = Rational(1, 10L * m * m) / (1L << halve);
    std::vector<Polygon> out;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      const Point &v1 = base.vertex(i + 1), &v2 = base.vertex(i + 2);
      const Point &vm1 = base.vertex(i + m - 1), &vm = base.vertex(i + m);
      std::vector<Point> chain{v1 + t * (v2 - v1)};
      for (int s = 2; s <= m - 1; ++s) chain.push_back(base.vertex(i + s));
      chain.push_back(vm1 + (1 - t) * (vm - vm1));
      std::vector<Point> v = chain;
      for (std::size_t s = chain.size(); s-- > 0;)
        v.push_back(chain[s] + t * (o - chain[s]));
      try {
        Polygon p = validate_polygon(std::move(v));
        if (!is_k_convex(p, 2))
          ok = false;
        else
          out.push_back(std::move(p));
      } catch (const PolygonError&) {
        ok = false;
      }
    }
    if (ok) return out;
  }
  throw PropertyAssertionFailed("helly_family: no trim/thickness produced 2-convex rings");
}

/// Row of n disjoint translated darts (quadrilaterals with one reflex
/// vertex a_i near y = 1): the notch apexes a_i sit on a flat parabola, so
/// no three are collinear, and every line a_i a_j passes below each c_k and
/// above each b_k, d_k. The parabola flattens (D doubles) until the
/// above/below pattern verifies.
inline std::vector<Polygon> quad_row(int n) {
  require_param(n >= 2, "quad_row needs n >= 2");
  for (Int d(64);; d *= 2) {
    require(d <= Int(1) << 40, "quad_row perturbation did not settle");
    std::vector<Point> a;
    for (long i = 0; i < n; ++i)
      a.push_back({Rational(7 * i), 1 + Rational(i * i) / Rational(d)});
    bool ok = true;
    for (long i = 0; i < n && ok; ++i)
      for (long j = i + 1; j < n && ok; ++j)
        for (long k = 0; k < n && ok; ++k) {
          Point c = ipt(7 * k, 4), b = ipt(7 * k + 3, -1), dd = ipt(7 * k - 3, -1);
          ok = orientation(a[i], a[j], c) == Orientation::Left &&
               orientation(a[i], a[j], b) == Orientation::Right &&
               orientation(a[i], a[j], dd) == Orientation::Right;
        }
    if (!ok) continue;
    std::vector<Polygon> out;
    for (long i = 0; i < n; ++i)
      out.push_back(validate_polygon(
          {a[i], ipt(7 * i + 3, -1), ipt(7 * i, 4), ipt(7 * i - 3, -1)}));
    for (const Polygon& p : out)
      require(stabbing_number(p).value == 4, "quad_row dart stabbing number");
    return out;
  }
}

/// Point seeing the whole polygon boundary, if any: the kernel is the
/// intersection of the inner closed half-planes of all edges, so it is
/// nonempty iff a polygon vertex or an intersection of two edge support
/// lines lies in every half-plane.
inline std::optional<Point> star_kernel_point(const Polygon& p) {
  auto sees_all = [&](const Point& q) {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (orientation(p.vertices[i], p.vertex(i + 1), q) == Orientation::Right)
        return false;
    return true;
  };
  std::vector<Point> cands = p.vertices;
  std::vector<Line> lines;
  for (std::size_t i = 0; i < p.size(); ++i)
    lines.push_back(line_through(p.vertices[i], p.vertex(i + 1)));
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (auto q = line_intersection(lines[i], lines[j])) cands.push_back(*q);
  for (const Point& q : cands)
    if (sees_all(q)) return q;
  return std::nullopt;
}

/// 2-convex polygon with empty kernel: the two-tine comb. Seeing a tine's
/// tip requires standing inside that tine's column, and the columns are
/// disjoint, so no point sees the whole boundary. Both properties asserted.
inline Polygon two_convex_nonstar() {
  Polygon p = comb(2);
  require(is_k_convex(p, 2), "two_convex_nonstar must be 2-convex");
  require(!star_kernel_point(p), "two_convex_nonstar must have an empty kernel");
  return p;
}

// --- named generation surface ----------------------------------------------

enum class FixtureName {
  ConvexNgon,
  Comb,
  PseudoTriangle,
  SpikeRect,
  SpikyStar,
  ManyPockets,
  Amoeba,
  HellyFamily,
  QuadRow,
  InterlockCombs,
};

struct FixtureSpec {
  FixtureName name;
  std::map<std::string, long> params;
  std::uint64_t seed = 0;
};

using FixtureOutput = std::variant<Polygon, std::vector<Polygon>>;

/// Single dispatch point for fixture generation by name; `interlock_combs`
/// selects its shape with variant = 0 (disjoint union pair), 1 (facing
/// pair), 2 (stacked family).
inline FixtureOutput generate(const FixtureSpec& spec) {
  auto param = [&](const std::string& key, long def = LONG_MIN) {
    auto it = spec.params.find(key);
    if (it != spec.params.end()) return it->second;
    if (def != LONG_MIN) return def;
    throw ParamOutOfRange("missing fixture parameter: " + key);
  };
  switch (spec.name) {
    case FixtureName::ConvexNgon:
      return convex_ngon(static_cast<int>(param("n")));
    case FixtureName::Comb:
      return comb(static_cast<int>(param("k")), static_cast<int>(param("n", 0)));
    case FixtureName::PseudoTriangle:
      return pseudo_triangle(static_cast<int>(param("chain")));
    case FixtureName::SpikeRect:
      return spike_rect(static_cast<int>(param("s")));
    case FixtureName::SpikyStar:
      return spiky_star(static_cast<int>(param("m")));
    case FixtureName::ManyPockets:
      return many_pockets(static_cast<int>(param("m")));
    case FixtureName::Amoeba: {
      long k = param("k", 0);
      if (k == 0) {
        long n = param("n");
        while (2 * k * k < n) ++k;  // smallest k with n <= 2k^2
      }
      return amoeba(static_cast<int>(k));
    }
    case FixtureName::HellyFamily:
      return helly_family(static_cast<int>(param("m")));
    case FixtureName::QuadRow:
      return quad_row(static_cast<int>(param("n")));
    case FixtureName::InterlockCombs: {
      int k = static_cast<int>(param("k")), m = static_cast<int>(param("m"));
      switch (param("variant", 1)) {
        case 0:
          return aligned_comb_union(k, m);
        case 1:
          return facing_combs(k, m);
        case 2:
          return stacked_combs(k, m);
        default:
          throw ParamOutOfRange("interlock_combs variant must be 0, 1 or 2");
      }
    }
  }
  throw ParamOutOfRange("unknown fixture name");
}

}  // namespace kconvex::fixtures
