#pragma once

#include <algorithm>

namespace hotspot {

// Absolute tolerance on lengths and durations. All fit and containment
// tests accept values up to kEps past the boundary, so ties never flip a
// certified witness to invalid.
inline constexpr double kEps = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point lerp(const Point& a, const Point& b, double f) {
  return {a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)};
}

// Axis-parallel bounding box. Not constructible empty: start from a point
// and extend.
struct BBox {
  double min_x, max_x, min_y, max_y;

  static BBox of_point(const Point& p) { return {p.x, p.x, p.y, p.y}; }

  void extend(const Point& p) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }

  void extend(const BBox& o) {
    min_x = std::min(min_x, o.min_x);
    max_x = std::max(max_x, o.max_x);
    min_y = std::min(min_y, o.min_y);
    max_y = std::max(max_y, o.max_y);
  }

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
};

// Axis-parallel square given by its minimum corner. Squares are closed
// sets: boundary points count as contained.
struct Square {
  double anchor_x = 0.0;
  double anchor_y = 0.0;
  double side = 0.0;

  bool contains(const Point& p, double tol = kEps) const {
    return p.x >= anchor_x - tol && p.x <= anchor_x + side + tol &&
           p.y >= anchor_y - tol && p.y <= anchor_y + side + tol;
  }
};

// Closed time interval.
struct Window {
  double start = 0.0;
  double end = 0.0;

  double duration() const { return end - start; }
};

// A square plus a time interval whose sub-trajectory lies inside the
// square; certifies an achieved weight of `score` = interval duration.
struct Witness {
  Square square;
  Window interval;
  double score = 0.0;
};

// A sub-trajectory fits in some side x side square iff its bbox does.
inline bool fits(const BBox& b, double side) {
  return b.width() <= side + kEps && b.height() <= side + kEps;
}

// Canonical square over a fitting bbox, anchored at its minimum corner.
// Precondition: fits(b, side).
inline Square covering_square(const BBox& b, double side) {
  return {b.min_x, b.min_y, side};
}

}  // namespace hotspot
