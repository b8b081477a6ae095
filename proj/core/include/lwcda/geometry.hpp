#pragma once

#include <cmath>

namespace lwcda {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Axis-aligned deployment area with the origin at (0, 0).
struct Rect {
  double width = 0.0;
  double height = 0.0;

  double max_side() const { return width > height ? width : height; }
  Point2 center() const { return {width / 2.0, height / 2.0}; }

  friend bool operator==(const Rect&, const Rect&) = default;
};

inline double distance(const Point2& a, const Point2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace lwcda
