#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kconvex/geom.hpp"

namespace kconvex {

/// Vertex indices sorted by (x, y, index), plus the number of point
/// comparisons the sort performed.
struct SortedVertices {
  std::vector<std::size_t> order;
  std::size_t comparison_count = 0;
};

namespace detail {

class CountedLess {
 public:
  CountedLess(const std::vector<Point>& pts, std::size_t& count)
      : pts_(&pts), count_(&count) {}
  bool operator()(std::size_t a, std::size_t b) const {
    ++*count_;
    const Point &p = (*pts_)[a], &q = (*pts_)[b];
    if (p.x != q.x) return p.x < q.x;
    if (p.y != q.y) return p.y < q.y;
    return a < b;
  }

 private:
  const std::vector<Point>* pts_;
  std::size_t* count_;
};

}  // namespace detail

/// Insertion sort over the boundary sequence, probing linearly from the
/// previous insertion position. Cost is the total rank distance between
/// consecutive vertices, so roughly k passes over n for a boundary that
/// decomposes into 2k x-monotone runs.
inline SortedVertices sort_scan(const std::vector<Point>& pts) {
  SortedVertices out;
  detail::CountedLess less(pts, out.comparison_count);
  std::vector<std::size_t>& ord = out.order;
  std::size_t finger = 0;
  for (std::size_t v = 0; v < pts.size(); ++v) {
    std::size_t pos = std::min(finger, ord.size());
    while (pos > 0 && less(v, ord[pos - 1])) --pos;
    if (pos == std::min(finger, ord.size()))  // didn't move left: scan right
      while (pos < ord.size() && less(ord[pos], v)) ++pos;
    ord.insert(ord.begin() + pos, v);
    finger = pos;
  }
  return out;
}

inline SortedVertices sort_scan(const Polygon& poly) { return sort_scan(poly.vertices); }

/// Finger insertion sort: exponential search from the previous insertion
/// position, then binary search in the located bracket. An insertion at rank
/// distance d from the previous one costs O(log d) comparisons, so a
/// boundary splitting into 2k monotone runs sorts in O(n log(2+k)).
inline SortedVertices sort_finger(const std::vector<Point>& pts) {
  SortedVertices out;
  detail::CountedLess less(pts, out.comparison_count);
  std::vector<std::size_t>& ord = out.order;
  std::size_t finger = 0;
  for (std::size_t v = 0; v < pts.size(); ++v) {
    std::size_t lo = 0, hi = ord.size();
    std::size_t f = std::min(finger, ord.size());
    if (f < ord.size() && less(v, ord[f])) {
      // Gallop left: v belongs in [f - step, f).
      std::size_t step = 1;
      hi = f;
      while (step <= f && less(v, ord[f - step])) {
        hi = f - step;
        step *= 2;
      }
      lo = step <= f ? f - step + 1 : 0;
    } else {
      // Gallop right: v belongs in (f + step/2, f + step].
      std::size_t step = 1;
      lo = f;
      while (f + step < ord.size() && less(ord[f + step], v)) {
        lo = f + step + 1;
        step *= 2;
      }
      hi = std::min(f + step, ord.size());
    }
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (less(ord[mid], v))
        lo = mid + 1;
      else
        hi = mid;
    }
    ord.insert(ord.begin() + lo, v);
    finger = lo;
  }
  return out;
}

inline SortedVertices sort_finger(const Polygon& poly) { return sort_finger(poly.vertices); }

struct Triangulation {
  std::vector<std::array<std::size_t, 3>> triangles;
  std::size_t max_active_edges = 0;   // peak edges crossed by the sweep line
  std::size_t comparison_count = 0;   // from the vertex sort
};

namespace detail {

/// Lexicographic (x, y, index) order used by the sweep.
inline bool lex_before(const Polygon& poly, std::size_t a, std::size_t b) {
  const Point &p = poly.vertices[a], &q = poly.vertices[b];
  if (p.x != q.x) return p.x < q.x;
  if (p.y != q.y) return p.y < q.y;
  return a < b;
}

/// y-coordinate of edge (e, e+1) at sweep abscissa x; the edge is assumed
/// non-vertical while queried (vertical edges only live between their own
/// two events).
inline Rational edge_y_at(const Polygon& poly, std::size_t e, const Rational& x) {
  const Point& a = poly.vertices[e];
  const Point& b = poly.vertex(e + 1);
  if (a.x == b.x) return a.y < b.y ? a.y : b.y;
  return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

enum class VertexClass { Start, End, Split, Merge, RegularLower, RegularUpper };

inline VertexClass classify(const Polygon& poly, std::size_t v) {
  std::size_t p = poly.prev(v), n = poly.next(v);
  bool p_after = lex_before(poly, v, p);
  bool n_after = lex_before(poly, v, n);
  if (p_after && n_after) {
    // Both neighbors to the right: convex corner starts a component, reflex
    // corner splits one.
    return orientation(poly.vertex(p), poly.vertices[v], poly.vertex(n)) ==
                   Orientation::Left
               ? VertexClass::Start
               : VertexClass::Split;
  }
  if (!p_after && !n_after) {
    return orientation(poly.vertex(p), poly.vertices[v], poly.vertex(n)) ==
                   Orientation::Left
               ? VertexClass::End
               : VertexClass::Merge;
  }
  // Lower chain is traversed left to right for a CCW polygon.
  return n_after ? VertexClass::RegularLower : VertexClass::RegularUpper;
}

/// Sweep status entry: a lower-chain edge (interior above it) and its
/// helper vertex for diagonal insertion.
struct StatusEdge {
  std::size_t edge;
  std::size_t helper;
  bool helper_is_merge;
};

/// Splits the cycle containing both diagonal endpoints into two cycles.
inline void split_cycles(std::vector<std::vector<std::size_t>>& cycles,
                         std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    auto& cy = cycles[c];
    auto ia = std::find(cy.begin(), cy.end(), a);
    auto ib = std::find(cy.begin(), cy.end(), b);
    if (ia == cy.end() || ib == cy.end()) continue;
    if (ia > ib) std::swap(ia, ib);
    std::vector<std::size_t> first(ia, ib + 1);
    std::vector<std::size_t> second(ib, cy.end());
    second.insert(second.end(), cy.begin(), ia + 1);
    cy = std::move(first);
    cycles.push_back(std::move(second));
    return;
  }
}

/// Stack-based triangulation of one x-monotone cycle (original indices,
/// counterclockwise). Emits triangles with positive signed area.
inline void triangulate_monotone(const Polygon& poly,
                                 const std::vector<std::size_t>& cycle,
                                 std::vector<std::array<std::size_t, 3>>& out) {
  const std::size_t m = cycle.size();
  auto emit = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (orientation(poly.vertices[a], poly.vertices[b], poly.vertices[c]) !=
        Orientation::Left)
      std::swap(b, c);
    out.push_back({a, b, c});
  };
  if (m == 3) {
    emit(cycle[0], cycle[1], cycle[2]);
    return;
  }
  std::size_t leftmost = 0;
  for (std::size_t i = 1; i < m; ++i)
    if (lex_before(poly, cycle[i], cycle[leftmost])) leftmost = i;
  // Walking forward from the leftmost vertex follows the lower chain.
  std::vector<std::pair<std::size_t, bool>> seq;  // (index, on lower chain)
  {
    std::vector<std::pair<std::size_t, bool>> lower, upper;
    std::size_t i = leftmost;
    lower.push_back({cycle[i], true});
    while (true) {
      std::size_t j = (i + 1) % m;
      if (!lex_before(poly, cycle[i], cycle[j])) break;
      lower.push_back({cycle[j], true});
      i = j;
    }
    std::size_t rightmost = i;
    i = leftmost;
    while (i != rightmost) {
      std::size_t j = (i + m - 1) % m;
      if (j != rightmost) upper.push_back({cycle[j], false});
      i = j;
    }
    // Merge the chains into left-to-right order.
    std::size_t a = 0, b = 0;
    while (a < lower.size() || b < upper.size()) {
      if (b == upper.size() ||
          (a < lower.size() && lex_before(poly, lower[a].first, upper[b].first)))
        seq.push_back(lower[a++]);
      else
        seq.push_back(upper[b++]);
    }
  }
  std::vector<std::pair<std::size_t, bool>> stack{seq[0], seq[1]};
  for (std::size_t j = 2; j + 1 < seq.size(); ++j) {
    auto [v, lower] = seq[j];
    if (lower != stack.back().second) {
      while (stack.size() > 1) {
        emit(v, stack.back().first, stack[stack.size() - 2].first);
        stack.pop_back();
      }
      stack.pop_back();
      stack.push_back(seq[j - 1]);
      stack.push_back({v, lower});
    } else {
      // Pop while the diagonal to the next stack vertex lies inside: on the
      // lower chain the funnel turns left, on the upper chain right.
      while (stack.size() > 1) {
        const Point& a = poly.vertices[stack[stack.size() - 2].first];
        const Point& b = poly.vertices[stack.back().first];
        const Point& c = poly.vertices[v];
        Orientation o = orientation(a, b, c);
        if (lower ? o != Orientation::Left : o != Orientation::Right) break;
        emit(v, stack.back().first, stack[stack.size() - 2].first);
        stack.pop_back();
      }
      stack.push_back({v, lower});
    }
  }
  // The rightmost vertex closes the fan over whatever remains.
  std::size_t last = seq.back().first;
  for (std::size_t i = 0; i + 1 < stack.size(); ++i)
    emit(last, stack[i].first, stack[i + 1].first);
}

}  // namespace detail

/// Plane-sweep triangulation: sort vertices left to right, split the polygon
/// into x-monotone pieces by adding a diagonal at every split/merge vertex,
/// then triangulate each piece with the reflex-chain stack method. The peak
/// number of edges crossed by the sweep line is recorded; for a polygon with
/// stabbing number 2k it never exceeds 2k.
inline Triangulation triangulate(const Polygon& poly) {
  const std::size_t n = poly.size();
  Triangulation out;
  SortedVertices sorted = sort_finger(poly);
  out.comparison_count = sorted.comparison_count;

  std::vector<detail::StatusEdge> status;  // lower-chain edges with helpers
  std::vector<std::pair<std::size_t, std::size_t>> diagonals;
  std::size_t active = 0;  // edges currently crossed by the sweep line
  auto find_below = [&](std::size_t v) -> detail::StatusEdge* {
    const Point& p = poly.vertices[v];
    detail::StatusEdge* best = nullptr;
    std::optional<Rational> best_y;
    for (auto& se : status) {
      Rational y = detail::edge_y_at(poly, se.edge, p.x);
      if (y < p.y && (!best_y || *best_y < y)) {
        best = &se;
        best_y = y;
      }
    }
    return best;
  };
  auto remove_edge = [&](std::size_t e, std::size_t v) {
    for (std::size_t i = 0; i < status.size(); ++i)
      if (status[i].edge == e) {
        if (status[i].helper_is_merge) diagonals.push_back({v, status[i].helper});
        status.erase(status.begin() + i);
        return;
      }
  };
  auto set_helper = [&](std::size_t v, bool is_merge) {
    detail::StatusEdge* below = find_below(v);
    if (below) {
      if (below->helper_is_merge) diagonals.push_back({v, below->helper});
      below->helper = v;
      below->helper_is_merge = is_merge;
    }
  };

  for (std::size_t v : sorted.order) {
    std::size_t ein = poly.prev(v), eout = v;
    using VC = detail::VertexClass;
    switch (detail::classify(poly, v)) {
      case VC::Start:
        status.push_back({eout, v, false});
        active += 2;
        break;
      case VC::Split: {
        detail::StatusEdge* below = find_below(v);
        if (below) {
          diagonals.push_back({v, below->helper});
          below->helper = v;
          below->helper_is_merge = false;
        }
        status.push_back({eout, v, false});
        active += 2;
        break;
      }
      case VC::End:
        remove_edge(ein, v);
        active -= 2;
        break;
      case VC::Merge:
        remove_edge(ein, v);
        set_helper(v, true);
        active -= 2;
        break;
      case VC::RegularLower:
        remove_edge(ein, v);
        status.push_back({eout, v, false});
        break;
      case VC::RegularUpper:
        set_helper(v, false);
        break;
    }
    out.max_active_edges = std::max(out.max_active_edges, active);
  }

  std::sort(diagonals.begin(), diagonals.end());
  diagonals.erase(std::unique(diagonals.begin(), diagonals.end()), diagonals.end());
  std::vector<std::vector<std::size_t>> cycles;
  cycles.emplace_back();
  for (std::size_t i = 0; i < n; ++i) cycles[0].push_back(i);
  for (auto [a, b] : diagonals) detail::split_cycles(cycles, a, b);
  // Deterministic output order: pieces by their leftmost vertex.
  std::sort(cycles.begin(), cycles.end(), [&](const auto& a, const auto& b) {
    std::size_t ma = *std::min_element(a.begin(), a.end(), [&](auto i, auto j) {
      return detail::lex_before(poly, i, j);
    });
    std::size_t mb = *std::min_element(b.begin(), b.end(), [&](auto i, auto j) {
      return detail::lex_before(poly, i, j);
    });
    return detail::lex_before(poly, ma, mb);
  });
  for (const auto& cy : cycles) detail::triangulate_monotone(poly, cy, out.triangles);
  return out;
}

/// Result of checking a triangulation against its polygon: empty string on
/// success, otherwise a description of the first violated check.
inline std::string triangulation_error(const Polygon& poly, const Triangulation& t) {
  const std::size_t n = poly.size();
  if (t.triangles.size() != n - 2)
    return "expected " + std::to_string(n - 2) + " triangles, got " +
           std::to_string(t.triangles.size());
  Rational area_sum = 0;
  for (std::size_t i = 0; i < t.triangles.size(); ++i) {
    auto [a, b, c] = t.triangles[i];
    if (a >= n || b >= n || c >= n) return "triangle " + std::to_string(i) + ": bad index";
    Rational a2 = cross(poly.vertices[b] - poly.vertices[a],
                        poly.vertices[c] - poly.vertices[a]);
    if (sign(a2) <= 0) return "triangle " + std::to_string(i) + ": non-positive area";
    area_sum += a2;
  }
  if (area_sum != poly.signed_area2()) return "triangle areas do not sum to polygon area";
  // Collect triangle edges; each is either a polygon edge or a diagonal.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [a, b, c] : t.triangles)
    for (auto [u, v] : {std::pair{a, b}, {b, c}, {c, a}})
      edges.push_back({std::min(u, v), std::max(u, v)});
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  auto is_poly_edge = [&](std::size_t u, std::size_t v) {
    return (u + 1) % n == v || (v + 1) % n == u;
  };
  for (auto [u, v] : edges) {
    if (is_poly_edge(u, v)) continue;
    // Diagonal: interior except at endpoints. Midpoint inside suffices once
    // crossing-freedom is checked below.
    Point mid{(poly.vertices[u].x + poly.vertices[v].x) / 2,
              (poly.vertices[u].y + poly.vertices[v].y) / 2};
    if (point_in_polygon(mid, poly) != PointLocation::Inside)
      return "diagonal " + std::to_string(u) + "-" + std::to_string(v) +
             " leaves the polygon";
    for (std::size_t e = 0; e < n; ++e) {
      std::size_t e2 = (e + 1) % n;
      if (e == u || e == v || e2 == u || e2 == v) continue;
      if (segments_intersect(poly.vertices[u], poly.vertices[v],
                             poly.vertices[e], poly.vertices[e2]))
        return "diagonal " + std::to_string(u) + "-" + std::to_string(v) +
               " crosses boundary edge " + std::to_string(e);
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (segments_intersect(poly.vertices[a], poly.vertices[b],
                             poly.vertices[c], poly.vertices[d]))
        return "edges " + std::to_string(a) + "-" + std::to_string(b) + " and " +
               std::to_string(c) + "-" + std::to_string(d) + " cross";
    }
  return {};
}

inline bool validate_triangulation(const Polygon& poly, const Triangulation& t) {
  return triangulation_error(poly, t).empty();
}

}  // namespace kconvex
