#include "polyassoc/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "polyassoc/error.hpp"

namespace polyassoc {

Rational cross(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int orient(const Point& a, const Point& b, const Point& c) { return cross(a, b, c).sign(); }

Rational triangle_area(const Point& a, const Point& b, const Point& c) {
  Rational twice = cross(a, b, c);
  if (twice.sign() < 0) twice = -twice;
  return twice / 2;
}

Rational signed_area(std::span<const Point> loop) {
  Rational twice = 0;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = loop[i];
    const Point& b = loop[(i + 1) % n];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / 2;
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) ||
         on_segment(b, c, d);
}

bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

OrientationTable::OrientationTable(std::span<const Point> points)
    : n_(points.size()), signs_(n_ * n_ * n_, 0) {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      for (std::size_t k = j + 1; k < n_; ++k) {
        const auto s = static_cast<std::int8_t>(orient(points[i], points[j], points[k]));
        const auto t = static_cast<std::int8_t>(-s);
        signs_[(i * n_ + j) * n_ + k] = s;
        signs_[(j * n_ + k) * n_ + i] = s;
        signs_[(k * n_ + i) * n_ + j] = s;
        signs_[(j * n_ + i) * n_ + k] = t;
        signs_[(i * n_ + k) * n_ + j] = t;
        signs_[(k * n_ + j) * n_ + i] = t;
      }
    }
  }
}

std::optional<std::size_t> Polygon::find_label(int label) const {
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

std::size_t Polygon::next(std::size_t v) const {
  const Loop& loop = loops_[loop_of_[v]];
  return loop.begin + (v - loop.begin + 1) % loop.size;
}

std::size_t Polygon::prev(std::size_t v) const {
  const Loop& loop = loops_[loop_of_[v]];
  return loop.begin + (v - loop.begin + loop.size - 1) % loop.size;
}

bool Polygon::adjacent(std::size_t u, std::size_t v) const {
  return u != v && loop_of_[u] == loop_of_[v] && (next(u) == v || next(v) == u);
}

Rational Polygon::area() const {
  Rational total = 0;
  for (const Loop& loop : loops_) {
    total += signed_area(std::span<const Point>(points_).subspan(loop.begin, loop.size));
  }
  return total;
}

std::vector<std::vector<Point>> Polygon::loops_in_label_order() const {
  std::vector<std::vector<Point>> out;
  for (const Loop& loop : loops_) {
    std::vector<std::size_t> idx(loop.size);
    std::iota(idx.begin(), idx.end(), loop.begin);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return labels_[a] < labels_[b]; });
    std::vector<Point> pts;
    pts.reserve(idx.size());
    for (std::size_t i : idx) pts.push_back(points_[i]);
    out.push_back(std::move(pts));
  }
  return out;
}

namespace {

std::string label_list(std::initializer_list<int> labels) {
  std::string s;
  for (int l : labels) {
    if (!s.empty()) s += ",";
    s += std::to_string(l);
  }
  return s;
}

// Edges are (start index, end index) in flattened storage.
void check_simple(const std::vector<Point>& pts, const std::vector<Polygon::Loop>& loops,
                  const std::vector<int>& labels) {
  struct Edge {
    std::size_t a, b;
    std::size_t loop;
  };
  std::vector<Edge> edges;
  for (std::size_t l = 0; l < loops.size(); ++l) {
    const auto& loop = loops[l];
    for (std::size_t k = 0; k < loop.size; ++k) {
      edges.push_back({loop.begin + k, loop.begin + (k + 1) % loop.size, l});
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      const Edge& p = edges[e];
      const Edge& q = edges[f];
      const Point& a = pts[p.a];
      const Point& b = pts[p.b];
      const Point& c = pts[q.a];
      const Point& d = pts[q.b];
      bool bad = false;
      if (p.b == q.a || p.a == q.b) {
        // Adjacent edges may only share their common vertex.
        const std::size_t shared = p.b == q.a ? p.b : p.a;
        const Point& far_p = pts[shared == p.a ? p.b : p.a];
        const Point& far_q = pts[shared == q.a ? q.b : q.a];
        const Point& s = pts[shared];
        if (orient(far_p, s, far_q) == 0) {
          bad = on_segment(far_q, s, far_p) || on_segment(far_p, s, far_q);
        }
        if (p.b == q.a && p.a == q.b) bad = true;  // two-vertex loop
      } else {
        bad = segments_intersect(a, b, c, d);
      }
      if (bad) {
        throw Error(ErrorCode::NotSimple,
                    "boundary edges " + label_list({labels[p.a], labels[p.b]}) + " and " +
                        label_list({labels[q.a], labels[q.b]}) + " intersect");
      }
    }
  }
}

int locate_in_loop(std::span<const Point> loop, const Point& q) {
  bool inside = false;
  const std::size_t n = loop.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = loop[i];
    const Point& b = loop[(i + 1) % n];
    if (on_segment(q, a, b)) return 0;
    if ((a.y > q.y) != (b.y > q.y)) {
      const int o = orient(a, b, q);
      // Crossing lies to the right of q.
      if ((b.y > a.y) ? o > 0 : o < 0) inside = !inside;
    }
  }
  return inside ? 1 : -1;
}

}  // namespace

Polygon validate_polygon(std::vector<Point> vertices, ValidationOptions options) {
  return validate_region(std::move(vertices), {}, options);
}

Polygon validate_region(std::vector<Point> outer, std::vector<std::vector<Point>> holes,
                        ValidationOptions options) {
  if (outer.size() < 3) {
    throw Error(ErrorCode::TooFewVertices, "polygon needs at least 3 vertices");
  }
  for (const auto& hole : holes) {
    if (hole.size() < 3) throw Error(ErrorCode::TooFewVertices, "hole needs at least 3 vertices");
  }

  Polygon poly;
  int next_label = 1;
  auto append_loop = [&](std::vector<Point>& loop) {
    Polygon::Loop l{poly.points_.size(), loop.size()};
    for (auto& p : loop) {
      poly.points_.push_back(std::move(p));
      poly.labels_.push_back(next_label++);
      poly.loop_of_.push_back(poly.loops_.size());
    }
    poly.loops_.push_back(l);
  };
  append_loop(outer);
  for (auto& hole : holes) append_loop(hole);

  check_simple(poly.points_, poly.loops_, poly.labels_);

  // General position over all vertices jointly.
  const std::size_t n = poly.points_.size();
  for (std::size_t i = 0; i < n && !poly.degenerate_; ++i) {
    for (std::size_t j = i + 1; j < n && !poly.degenerate_; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (orient(poly.points_[i], poly.points_[j], poly.points_[k]) == 0) {
          if (!options.allow_degenerate) {
            throw Error(ErrorCode::CollinearTriple,
                        "vertices " +
                            label_list({poly.labels_[i], poly.labels_[j], poly.labels_[k]}) +
                            " are collinear");
          }
          poly.degenerate_ = true;
          break;
        }
      }
    }
  }

  // Region on the left: outer counterclockwise, holes clockwise. Reversal
  // keeps each loop's first vertex in place and keeps every label.
  for (std::size_t l = 0; l < poly.loops_.size(); ++l) {
    const auto& loop = poly.loops_[l];
    auto pts = std::span<Point>(poly.points_).subspan(loop.begin, loop.size);
    const int s = signed_area(pts).sign();
    if (s == 0) throw Error(ErrorCode::NotSimple, "loop has zero area");
    const bool want_ccw = l == 0;
    if ((s > 0) != want_ccw) {
      std::reverse(pts.begin() + 1, pts.end());
      auto labs = std::span<int>(poly.labels_).subspan(loop.begin, loop.size);
      std::reverse(labs.begin() + 1, labs.end());
    }
  }

  if (poly.loops_.size() > 1) {
    const auto loop_span = [&](std::size_t l) {
      const auto& loop = poly.loops_[l];
      return std::span<const Point>(poly.points_).subspan(loop.begin, loop.size);
    };
    for (std::size_t h = 1; h < poly.loops_.size(); ++h) {
      const Point& probe = poly.points_[poly.loops_[h].begin];
      if (locate_in_loop(loop_span(0), probe) != 1) {
        throw Error(ErrorCode::InvalidHole, "hole " + std::to_string(h) + " is not inside the outer boundary");
      }
      for (std::size_t g = 1; g < poly.loops_.size(); ++g) {
        if (g != h && locate_in_loop(loop_span(g), probe) != -1) {
          throw Error(ErrorCode::InvalidHole,
                      "hole " + std::to_string(h) + " lies inside hole " + std::to_string(g));
        }
      }
    }
  }

  poly.orientation_ = std::make_shared<const OrientationTable>(poly.points_);
  return poly;
}

std::vector<std::size_t> reflex_vertices(const Polygon& polygon) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < polygon.size(); ++v) {
    if (polygon.orient(polygon.prev(v), v, polygon.next(v)) < 0) out.push_back(v);
  }
  return out;
}

bool is_convex(const Polygon& polygon) {
  return !polygon.has_holes() && reflex_vertices(polygon).empty();
}

int locate(const Polygon& polygon, const Point& q) {
  const auto loops = polygon.loops();
  const auto pts = polygon.points();
  const int outer = locate_in_loop(pts.subspan(loops[0].begin, loops[0].size), q);
  if (outer <= 0) return outer;
  for (std::size_t h = 1; h < loops.size(); ++h) {
    const int in_hole = locate_in_loop(pts.subspan(loops[h].begin, loops[h].size), q);
    if (in_hole == 0) return 0;
    if (in_hole > 0) return -1;
  }
  return 1;
}

Point KernelRegion::witness() const {
  if (vertices.empty()) throw Error(ErrorCode::NotStar, "kernel is empty");
  Point sum{0, 0};
  for (const Point& p : vertices) {
    sum.x += p.x;
    sum.y += p.y;
  }
  const Rational k(static_cast<long>(vertices.size()));
  return {sum.x / k, sum.y / k};
}

KernelRegion kernel(const Polygon& polygon) {
  if (polygon.has_holes()) {
    throw Error(ErrorCode::HolesUnsupported, "kernel is defined for polygons without holes");
  }
  const auto pts = polygon.points();
  Rational min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
  for (const Point& p : pts) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  std::vector<Point> region{{min_x, min_y}, {max_x, min_y}, {max_x, max_y}, {min_x, max_y}};

  for (std::size_t v = 0; v < pts.size() && !region.empty(); ++v) {
    const Point& a = pts[v];
    const Point& b = pts[polygon.next(v)];
    std::vector<Point> clipped;
    const std::size_t m = region.size();
    for (std::size_t i = 0; i < m; ++i) {
      const Point& cur = region[i];
      const Point& nxt = region[(i + 1) % m];
      const Rational fc = cross(a, b, cur);
      const Rational fn = cross(a, b, nxt);
      if (fc.sign() >= 0) clipped.push_back(cur);
      if (fc.sign() * fn.sign() < 0) {
        const Rational s = fc / (fc - fn);
        clipped.push_back({cur.x + (nxt.x - cur.x) * s, cur.y + (nxt.y - cur.y) * s});
      }
    }
    std::vector<Point> dedup;
    for (auto& p : clipped) {
      if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(std::move(p));
    }
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    region = std::move(dedup);
  }

  KernelRegion out;
  if (region.empty()) return out;
  if (region.size() == 1) {
    out.kind = KernelKind::Point;
    out.vertices = region;
    return out;
  }
  if (signed_area(region).sign() == 0) {
    auto lex = [](const Point& p, const Point& q) { return p.x < q.x || (p.x == q.x && p.y < q.y); };
    auto [lo, hi] = std::minmax_element(region.begin(), region.end(), lex);
    out.kind = KernelKind::Segment;
    out.vertices = {*lo, *hi};
    return out;
  }
  // Drop vertices where the boundary runs straight through.
  std::vector<Point> strict;
  const std::size_t m = region.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (orient(region[(i + m - 1) % m], region[i], region[(i + 1) % m]) != 0) {
      strict.push_back(region[i]);
    }
  }
  out.kind = KernelKind::Polygon;
  out.vertices = std::move(strict);
  return out;
}

}  // namespace polyassoc
