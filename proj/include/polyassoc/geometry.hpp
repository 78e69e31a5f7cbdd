#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "polyassoc/rational.hpp"

namespace polyassoc {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// det(b - a, c - a).
Rational cross(const Point& a, const Point& b, const Point& c);

/// +1 left turn, 0 collinear, -1 right turn.
int orient(const Point& a, const Point& b, const Point& c);

Rational triangle_area(const Point& a, const Point& b, const Point& c);

/// Shoelace area, positive for counterclockwise loops.
Rational signed_area(std::span<const Point> loop);

/// p lies on the closed segment ab.
bool on_segment(const Point& p, const Point& a, const Point& b);

/// Closed segments ab and cd share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

/// Open segments ab and cd cross at a single interior point of both.
bool segments_properly_cross(const Point& a, const Point& b, const Point& c, const Point& d);

/// Cached orientation signs of every vertex triple. Built once per polygon so
/// the combinatorial kernels never touch rationals in their inner loops.
class OrientationTable {
 public:
  OrientationTable() = default;
  explicit OrientationTable(std::span<const Point> points);

  int operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return signs_[(i * n_ + j) * n_ + k];
  }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::int8_t> signs_;
};

struct ValidationOptions {
  /// Accept collinear triples and mark the polygon degenerate instead of
  /// rejecting it. Degenerate polygons are refused by the complex and
  /// deformation modules.
  bool allow_degenerate = false;
};

/// A validated simple polygon, optionally with holes (a generalized polygon).
///
/// Vertices are stored loop by loop: the outer loop counterclockwise, then each
/// hole clockwise, so the region always lies to the left of the directed
/// boundary. Storage indices are 0-based; every vertex keeps the 1-based label
/// it had in the input, which is what all exports report.
class Polygon {
 public:
  struct Loop {
    std::size_t begin = 0;
    std::size_t size = 0;
  };

  std::size_t size() const { return points_.size(); }
  std::size_t hole_count() const { return loops_.size() - 1; }
  bool has_holes() const { return loops_.size() > 1; }
  bool degenerate() const { return degenerate_; }

  std::span<const Point> points() const { return points_; }
  const Point& point(std::size_t v) const { return points_[v]; }
  int label(std::size_t v) const { return labels_[v]; }
  std::span<const int> labels() const { return labels_; }
  std::optional<std::size_t> find_label(int label) const;

  std::span<const Loop> loops() const { return loops_; }
  std::size_t loop_of(std::size_t v) const { return loop_of_[v]; }
  std::size_t next(std::size_t v) const;
  std::size_t prev(std::size_t v) const;
  /// u and v are joined by a boundary edge.
  bool adjacent(std::size_t u, std::size_t v) const;

  int orient(std::size_t i, std::size_t j, std::size_t k) const { return (*orientation_)(i, j, k); }
  const OrientationTable& orientation() const { return *orientation_; }

  /// Area of the region (outer minus holes).
  Rational area() const;

  /// Loops in input label order, as given by the caller (outer first).
  std::vector<std::vector<Point>> loops_in_label_order() const;

 private:
  friend Polygon validate_region(std::vector<Point>, std::vector<std::vector<Point>>,
                                 ValidationOptions);

  std::vector<Point> points_;
  std::vector<int> labels_;
  std::vector<Loop> loops_;
  std::vector<std::size_t> loop_of_;
  std::shared_ptr<const OrientationTable> orientation_;
  bool degenerate_ = false;
};

/// Validates a simple polygon; clockwise input is normalized to
/// counterclockwise with labels preserved.
/// Throws Error with TooFewVertices, NotSimple or CollinearTriple.
Polygon validate_polygon(std::vector<Point> vertices, ValidationOptions options = {});

/// Validates an outer loop plus holes. Hole vertices are labeled after the
/// outer vertices, hole by hole, in input order.
Polygon validate_region(std::vector<Point> outer, std::vector<std::vector<Point>> holes,
                        ValidationOptions options = {});

/// Storage indices of reflex vertices (interior angle above pi), including
/// hole vertices that are reflex as seen from the region.
std::vector<std::size_t> reflex_vertices(const Polygon& polygon);

bool is_convex(const Polygon& polygon);

/// -1 outside the region, 0 on its boundary, +1 strictly inside.
int locate(const Polygon& polygon, const Point& q);

enum class KernelKind { Empty, Point, Segment, Polygon };

struct KernelRegion {
  KernelKind kind = KernelKind::Empty;
  /// Counterclockwise vertices for Polygon, endpoints for Segment.
  std::vector<Point> vertices;

  bool empty() const { return kind == KernelKind::Empty; }
  bool full_dimensional() const { return kind == KernelKind::Polygon; }
  /// Interior point when full-dimensional, otherwise a point of the region.
  Point witness() const;
};

/// Intersection of the closed half-planes left of every boundary edge.
KernelRegion kernel(const Polygon& polygon);

}  // namespace polyassoc
