#pragma once

#include <optional>
#include <vector>

#include "kconvex/geom.hpp"
#include "kconvex/twoconvex.hpp"

namespace kconvex {

/// A pocket's convex/reflex/convex split failed, or a chain was not in
/// convex position — the input slipped past the 2-convexity check or is a
/// degenerate boundary case.
class PatternViolation : public std::runtime_error {
 public:
  PatternViolation(std::size_t pocket, std::size_t index)
      : std::runtime_error("pocket " + std::to_string(pocket) +
                           " violates the convex/reflex/convex pattern at vertex " +
                           std::to_string(index)),
        pocket_(pocket),
        index_(index) {}
  std::size_t pocket() const { return pocket_; }
  std::size_t index() const { return index_; }

 private:
  std::size_t pocket_, index_;
};

/// Cyclic run of vertex indices [start, start+length) mod n.
struct IndexRange {
  std::size_t start = 0;
  std::size_t length = 0;

  std::vector<std::size_t> indices(std::size_t n) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < length; ++i) out.push_back((start + i) % n);
    return out;
  }
  bool operator==(const IndexRange&) const = default;
};

/// One pocket of the boundary: the chain between two consecutive hull
/// vertices, split into convex prefix C1, reflex middle C2, convex suffix C3
/// (C1/C3 contain the bounding hull vertices; C2 may be empty).
struct Pocket {
  IndexRange c1, c2, c3;
};

struct PocketChains {
  std::vector<std::size_t> hull;  // hull vertex indices in boundary order
  std::vector<Pocket> pockets;    // only pockets with interior vertices
};

/// Splits every nontrivial pocket into its unique convex/reflex/convex
/// chain triple. Assumes the polygon passed the 2-convexity check; a pattern
/// outside convex* reflex* convex* raises PatternViolation.
inline PocketChains pocket_chains(const Polygon& poly) {
  const std::size_t n = poly.size();
  PocketChains out;
  out.hull = convex_hull(poly.vertices);
  std::sort(out.hull.begin(), out.hull.end());  // boundary order
  for (std::size_t h = 0; h < out.hull.size(); ++h) {
    std::size_t p0 = out.hull[h];
    std::size_t pt = out.hull[(h + 1) % out.hull.size()];
    std::size_t len = (pt + n - p0) % n + 1;  // chain p0..pt inclusive
    if (len <= 2) continue;                   // adjacent hull vertices: no pocket
    Pocket pk;
    std::size_t i = 0;
    while (i < len && vertex_kind(poly, (p0 + i) % n) == VertexKind::Convex) ++i;
    pk.c1 = {p0, i};
    std::size_t j = i;
    while (j < len && vertex_kind(poly, (p0 + j) % n) == VertexKind::Reflex) ++j;
    pk.c2 = {(p0 + i) % n, j - i};
    for (std::size_t r = j; r < len; ++r)
      if (vertex_kind(poly, (p0 + r) % n) != VertexKind::Convex)
        throw PatternViolation(out.pockets.size(), (p0 + r) % n);
    pk.c3 = {(p0 + j) % n, len - j};
    out.pockets.push_back(pk);
  }
  return out;
}

/// Decomposition of the boundary into maximal same-kind vertex runs: convex
/// runs as-is, reflex runs (reversed they are convex chains). For a 2-convex
/// polygon with hull size k this yields at most 2k chains.
struct ChainDecomposition {
  std::vector<IndexRange> chains;
};

namespace detail {

/// All consecutive triples along the path turn the same way (a convex or,
/// reversed, reflex polyline). Collinear triples count as violations.
inline bool consistent_turning(const std::vector<Point>& pts) {
  if (pts.size() <= 2) return true;
  Orientation first = orientation(pts[0], pts[1], pts[2]);
  if (first == Orientation::Collinear) return false;
  for (std::size_t i = 1; i + 2 < pts.size(); ++i)
    if (orientation(pts[i], pts[i + 1], pts[i + 2]) != first) return false;
  return true;
}

}  // namespace detail

inline ChainDecomposition convex_chains(const Polygon& poly) {
  const std::size_t n = poly.size();
  ChainDecomposition out;
  auto kind = [&](std::size_t i) { return vertex_kind(poly, i % n); };
  std::size_t first_break = n;
  for (std::size_t i = 0; i < n; ++i)
    if (kind(i) != kind(i + 1)) {
      first_break = (i + 1) % n;
      break;
    }
  if (first_break == n) {
    out.chains.push_back({0, n});  // uniform kind: single chain
  } else {
    std::size_t start = first_break;
    std::size_t consumed = 0;
    while (consumed < n) {
      std::size_t len = 1;
      while (len < n - consumed && kind(start + len) == kind(start)) ++len;
      out.chains.push_back({start % n, len});
      start = (start + len) % n;
      consumed += len;
    }
  }
  for (std::size_t c = 0; c < out.chains.size(); ++c) {
    std::vector<Point> pts;
    for (std::size_t i : out.chains[c].indices(n)) pts.push_back(poly.vertices[i]);
    if (!detail::consistent_turning(pts))
      throw PatternViolation(c, out.chains[c].start);
  }
  return out;
}

/// Smallest integer s with 2*s*s >= n, the guaranteed convex-position
/// subset size for a 2-convex polygon with n vertices.
inline std::size_t convex_subset_bound(std::size_t n) {
  std::size_t s = 0;
  while (2 * s * s < n) ++s;
  return s;
}

/// Larger of the hull vertex set and the best chain-derived subset (ties:
/// hull, then first chain). A chain is first reduced to the vertices of its
/// own hull: a chain can wrap so that non-consecutive vertices of it are
/// collinear, and those must be dropped to stay in strict convex position.
inline std::vector<std::size_t> largest_convex_subset(const Polygon& poly) {
  std::vector<std::size_t> hull = convex_hull(poly.vertices);
  std::sort(hull.begin(), hull.end());
  ChainDecomposition dec = convex_chains(poly);
  std::vector<std::size_t> best;
  for (const IndexRange& r : dec.chains) {
    std::vector<std::size_t> idx = r.indices(poly.size());
    if (idx.size() > 2) {
      std::vector<Point> pts;
      for (std::size_t i : idx) pts.push_back(poly.vertices[i]);
      std::vector<std::size_t> strict;
      try {
        for (std::size_t h : convex_hull(pts)) strict.push_back(idx[h]);
      } catch (const PolygonError&) {
        continue;  // chain degenerate as a point set
      }
      idx = std::move(strict);
    }
    if (idx.size() > best.size()) best = std::move(idx);
  }
  if (best.size() > hull.size()) {
    std::sort(best.begin(), best.end());
    return best;
  }
  return hull;
}

/// An intermediate induced polygon of the partition recursion failed
/// validation or 2-convexity; surfaced rather than silently repaired.
class SubpolygonInvalid : public std::runtime_error {
 public:
  explicit SubpolygonInvalid(std::size_t round, const std::string& why)
      : std::runtime_error("partition round " + std::to_string(round) + ": " + why),
        round_(round) {}
  std::size_t round() const { return round_; }

 private:
  std::size_t round_;
};

/// Partitions the vertex set into convex-position groups by repeatedly
/// extracting the largest convex subset and re-forming the induced
/// cyclic-order polygon on the remainder.
inline std::vector<std::vector<std::size_t>> convex_partition(const Polygon& poly) {
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> remaining(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) remaining[i] = i;
  std::size_t round = 0;
  Polygon current = poly;
  while (remaining.size() > 3) {
    std::vector<std::size_t> sub = largest_convex_subset(current);
    std::vector<std::size_t> part, rest;
    std::size_t si = 0;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (si < sub.size() && sub[si] == i) {
        part.push_back(remaining[i]);
        ++si;
      } else {
        rest.push_back(remaining[i]);
      }
    }
    parts.push_back(std::move(part));
    remaining = std::move(rest);
    ++round;
    if (remaining.size() <= 3) break;
    std::vector<Point> pts;
    for (std::size_t i : remaining) pts.push_back(poly.vertices[i]);
    try {
      current = validate_polygon(pts);
    } catch (const PolygonError& e) {
      throw SubpolygonInvalid(round, e.what());
    }
    if (current.vertices != pts) {
      // Validation flips a clockwise remainder; keep the index map aligned.
      std::reverse(remaining.begin(), remaining.end());
      std::reverse(pts.begin(), pts.end());
      if (current.vertices != pts)
        throw SubpolygonInvalid(round, "induced polygon reordered the cycle");
    }
    if (!recognize_2convex(current).is_two_convex)
      throw SubpolygonInvalid(round, "induced polygon is not 2-convex");
  }
  if (!remaining.empty()) parts.push_back(std::move(remaining));
  return parts;
}

}  // namespace kconvex
