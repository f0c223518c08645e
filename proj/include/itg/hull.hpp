#pragma once

// Exact planar convex hull (monotone chain). Shared by the binary region
// vertex enumeration and the oracle's payoff-set convexification.

#include "itg/rational.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace itg {

using RatPoint = std::pair<Rat, Rat>;

inline Rat cross(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
  return (a.first - o.first) * (b.second - o.second) -
         (a.second - o.second) * (b.first - o.first);
}

// Hull vertices in counterclockwise order starting from the lexicographically
// smallest point. Interior and collinear points are dropped; degenerate
// inputs (empty, single point, segment) come back as their extreme points.
inline std::vector<RatPoint> convex_hull(std::vector<RatPoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t n = points.size();
  if (n <= 2) return points;

  std::vector<RatPoint> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower chain
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {  // upper chain
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);  // last point repeats the first
  return hull;
}

// Membership test against a convex polygon given as a CCW vertex list (the
// convex_hull output format). Degenerate polygons are handled exactly.
inline bool inside_hull(const std::vector<RatPoint>& hull, const RatPoint& p) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return hull.front() == p;
  if (hull.size() == 2) {
    // On-segment test: collinear and within the bounding box.
    if (cross(hull[0], hull[1], p) != 0) return false;
    const auto& [lo, hi] = std::minmax(hull[0], hull[1]);
    return !(p < lo) && !(hi < p);
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const RatPoint& a = hull[i];
    const RatPoint& b = hull[(i + 1) % hull.size()];
    if (cross(a, b, p) < 0) return false;
  }
  return true;
}

}  // namespace itg
