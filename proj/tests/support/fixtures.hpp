#pragma once

#include <utility>
#include <vector>

#include "polyassoc/geometry.hpp"

namespace fixtures {

using polyassoc::Point;
using polyassoc::Polygon;

inline Point pt(long x, long y) { return Point{polyassoc::Rational(x), polyassoc::Rational(y)}; }

inline std::vector<Point> points(std::initializer_list<std::pair<long, long>> xy) {
  std::vector<Point> out;
  for (auto [x, y] : xy) out.push_back(pt(x, y));
  return out;
}

inline Polygon polygon(std::initializer_list<std::pair<long, long>> xy) {
  return polyassoc::validate_polygon(points(xy));
}

/// Hexagon with two opposite notches, reflex at 2 and 5.
inline Polygon hexH() { return polygon({{0, 0}, {2, 1}, {4, 0}, {4, 4}, {2, 3}, {0, 4}}); }

inline Polygon notched_pentagon() { return polygon({{0, 0}, {4, 0}, {4, 4}, {2, 1}, {0, 4}}); }

/// Convex n-gon with vertices on the parabola y = x^2.
inline std::vector<Point> convex_points(int n) {
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) out.push_back(pt(i, static_cast<long>(i) * i));
  return out;
}
inline Polygon convex(int n) { return polyassoc::validate_polygon(convex_points(n)); }

/// Apex plus a reflex chain on an upward parabola: only the fan from the
/// apex survives, so the triangulation is unique and V has 2n-3 edges.
inline Polygon unique_triangulation(int n) {
  const int k = n - 1;  // chain length
  std::vector<Point> out{pt(0, 0)};
  // x runs from right to left so the chain is traversed counterclockwise.
  const long h = static_cast<long>(k) * k + 1;
  for (int i = 0; i < k; ++i) {
    const long x = static_cast<long>(k - 1) - 2L * i;
    out.push_back(pt(x, h + x * x));
  }
  return polyassoc::validate_polygon(out);
}

/// Two deep dents from opposite sides; the kernel is empty.
inline Polygon comb() {
  return polygon({{0, 0}, {4, 1}, {5, 9}, {6, 1}, {13, 2}, {12, 12}, {9, 11}, {8, 3}, {7, 12}, {1, 11}});
}

}  // namespace fixtures
