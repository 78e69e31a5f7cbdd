#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polyassoc/execution.hpp"
#include "polyassoc/geometry.hpp"

namespace polyassoc {

/// Unordered vertex pair, stored with a < b (storage indices).
struct Diagonal {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  static Diagonal of(std::size_t u, std::size_t v) {
    return u < v ? Diagonal{static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v)}
                 : Diagonal{static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(u)};
  }
  bool touches(std::size_t v) const { return a == v || b == v; }

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// Boundary edges plus diagonals, sorted.
struct VisibilityGraph {
  std::size_t n = 0;
  std::vector<Diagonal> edges;

  bool contains(std::size_t u, std::size_t v) const;
  std::size_t edge_count() const { return edges.size(); }
};

/// Interior diagonal test: no proper crossing with the boundary, no third
/// vertex on the segment, midpoint strictly inside the region. Adjacent
/// vertices give false. Throws SameVertex when i == j.
bool is_diagonal(const Polygon& polygon, std::size_t i, std::size_t j);

/// All diagonals of the region in (a, b) order.
std::vector<Diagonal> all_diagonals(const Polygon& polygon, Execution exec = Execution::parallel);

VisibilityGraph visibility_graph(const Polygon& polygon, Execution exec = Execution::parallel);

/// Open segments of two diagonals are disjoint. Throws NotADiagonal if
/// either argument is not a diagonal of the polygon.
bool noncrossing(const Polygon& polygon, Diagonal d1, Diagonal d2);

/// Geometric crossing of two vertex-to-vertex segments, no validation.
bool segments_cross(const Polygon& polygon, Diagonal d1, Diagonal d2);

/// Edges as sorted 1-based label pairs.
std::vector<std::pair<int, int>> labeled_edges(const Polygon& polygon, const VisibilityGraph& graph);

/// `graph V { 1 -- 2; ... }`, one edge per line, sorted by labels.
std::string to_dot(const Polygon& polygon, const VisibilityGraph& graph);

namespace detail {
std::vector<Diagonal> diagonals_serial(const Polygon& polygon);
std::vector<Diagonal> diagonals_parallel(const Polygon& polygon);
}  // namespace detail

}  // namespace polyassoc
