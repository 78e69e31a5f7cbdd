#include "random_polygons.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "polyassoc/error.hpp"

namespace testing_support {

using polyassoc::Point;
using polyassoc::Rational;

namespace {

std::vector<Point> random_points(std::mt19937& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    Point p{Rational(d(rng)), Rational(d(rng))};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return pts;
}

bool general_position(const std::vector<Point>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (polyassoc::orient(pts[i], pts[j], pts[k]) == 0) return false;
  return true;
}

std::vector<Point> untangle(std::vector<Point> pts) {
  const std::size_t n = pts.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n && !changed; ++i) {
      for (std::size_t j = i + 2; j < n && !changed; ++j) {
        if (i == 0 && j == n - 1) continue;
        const Point& a = pts[i];
        const Point& b = pts[i + 1];
        const Point& c = pts[j];
        const Point& d = pts[(j + 1) % n];
        if (polyassoc::segments_properly_cross(a, b, c, d)) {
          std::reverse(pts.begin() + static_cast<long>(i) + 1, pts.begin() + static_cast<long>(j) + 1);
          changed = true;
        }
      }
    }
  }
  return pts;
}

}  // namespace

polyassoc::Polygon random_simple_polygon(std::mt19937& rng, int n, bool require_nonconvex, int grid) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    auto pts = random_points(rng, n, 0, grid);
    if (!general_position(pts)) continue;
    std::shuffle(pts.begin(), pts.end(), rng);
    pts = untangle(std::move(pts));
    try {
      auto p = polyassoc::validate_polygon(pts);
      if (require_nonconvex && polyassoc::is_convex(p)) continue;
      return p;
    } catch (const polyassoc::Error&) {
    }
  }
  throw std::runtime_error("random_simple_polygon: no polygon found");
}

polyassoc::Polygon random_star_polygon(std::mt19937& rng, int n, int grid) {
  const Point origin{Rational(0), Rational(0)};
  auto half = [](const Point& p) { return p.y > 0 || (p.y == 0 && p.x > 0) ? 0 : 1; };
  for (int attempt = 0; attempt < 10000; ++attempt) {
    auto pts = random_points(rng, n, -grid, grid);
    if (std::find(pts.begin(), pts.end(), origin) != pts.end()) continue;
    if (!general_position(pts)) continue;
    std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
      if (half(a) != half(b)) return half(a) < half(b);
      return polyassoc::orient(origin, a, b) > 0;
    });
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      ok = polyassoc::orient(pts[i], pts[(i + 1) % n], origin) > 0;
    }
    if (!ok) continue;
    try {
      return polyassoc::validate_polygon(pts);
    } catch (const polyassoc::Error&) {
    }
  }
  throw std::runtime_error("random_star_polygon: no polygon found");
}

polyassoc::Polygon random_one_hole_region(std::mt19937& rng, int n, int grid) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto outer = random_points(rng, n - 3, 0, grid);
    std::shuffle(outer.begin(), outer.end(), rng);
    outer = untangle(std::move(outer));
    std::uniform_int_distribution<int> centre(grid / 4, 3 * grid / 4);
    const int cx = centre(rng);
    const int cy = centre(rng);
    auto hole = random_points(rng, 3, -grid / 8, grid / 8);
    for (auto& p : hole) {
      p.x += cx;
      p.y += cy;
    }
    std::vector<Point> all = outer;
    all.insert(all.end(), hole.begin(), hole.end());
    if (!general_position(all)) continue;
    try {
      return polyassoc::validate_region(outer, {hole});
    } catch (const polyassoc::Error&) {
    }
  }
  throw std::runtime_error("random_one_hole_region: no region found");
}

}  // namespace testing_support
