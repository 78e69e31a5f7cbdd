#include "polyassoc/visibility.hpp"

#include <algorithm>
#include <sstream>

#include "polyassoc/error.hpp"

namespace polyassoc {

bool VisibilityGraph::contains(std::size_t u, std::size_t v) const {
  return std::binary_search(edges.begin(), edges.end(), Diagonal::of(u, v));
}

bool is_diagonal(const Polygon& polygon, std::size_t i, std::size_t j) {
  if (i == j) throw Error(ErrorCode::SameVertex, "diagonal endpoints coincide");
  if (polygon.adjacent(i, j)) return false;
  const std::size_t n = polygon.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t l = polygon.next(k);
    if (k == i || k == j || l == i || l == j) continue;
    if (polygon.orient(i, j, k) * polygon.orient(i, j, l) < 0 &&
        polygon.orient(k, l, i) * polygon.orient(k, l, j) < 0) {
      return false;
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    if (w == i || w == j) continue;
    if (polygon.orient(i, j, w) == 0 && on_segment(polygon.point(w), polygon.point(i), polygon.point(j))) {
      return false;
    }
  }
  const Point& p = polygon.point(i);
  const Point& q = polygon.point(j);
  const Point mid{(p.x + q.x) / 2, (p.y + q.y) / 2};
  return locate(polygon, mid) == 1;
}

namespace detail {

std::vector<Diagonal> diagonals_serial(const Polygon& polygon) {
  std::vector<Diagonal> out;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (is_diagonal(polygon, i, j)) out.push_back(Diagonal::of(i, j));
    }
  }
  return out;
}

std::vector<Diagonal> diagonals_parallel(const Polygon& polygon) {
  const long n = static_cast<long>(polygon.size());
  std::vector<std::vector<Diagonal>> rows(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    auto& row = rows[static_cast<std::size_t>(i)];
    for (long j = i + 1; j < n; ++j) {
      if (is_diagonal(polygon, static_cast<std::size_t>(i), static_cast<std::size_t>(j))) {
        row.push_back(Diagonal::of(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      }
    }
  }
  std::vector<Diagonal> out;
  for (auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

}  // namespace detail

std::vector<Diagonal> all_diagonals(const Polygon& polygon, Execution exec) {
  return exec == Execution::serial ? detail::diagonals_serial(polygon)
                                   : detail::diagonals_parallel(polygon);
}

VisibilityGraph visibility_graph(const Polygon& polygon, Execution exec) {
  VisibilityGraph g;
  g.n = polygon.size();
  g.edges = all_diagonals(polygon, exec);
  for (std::size_t v = 0; v < polygon.size(); ++v) g.edges.push_back(Diagonal::of(v, polygon.next(v)));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

bool segments_cross(const Polygon& polygon, Diagonal d1, Diagonal d2) {
  if (d1.touches(d2.a) || d1.touches(d2.b)) return false;
  return polygon.orient(d1.a, d1.b, d2.a) * polygon.orient(d1.a, d1.b, d2.b) < 0 &&
         polygon.orient(d2.a, d2.b, d1.a) * polygon.orient(d2.a, d2.b, d1.b) < 0;
}

bool noncrossing(const Polygon& polygon, Diagonal d1, Diagonal d2) {
  for (const Diagonal& d : {d1, d2}) {
    if (d.a == d.b || d.a >= polygon.size() || d.b >= polygon.size() || !is_diagonal(polygon, d.a, d.b)) {
      throw Error(ErrorCode::NotADiagonal, "segment is not a diagonal");
    }
  }
  return !segments_cross(polygon, d1, d2);
}

std::vector<std::pair<int, int>> labeled_edges(const Polygon& polygon, const VisibilityGraph& graph) {
  std::vector<std::pair<int, int>> out;
  out.reserve(graph.edges.size());
  for (const Diagonal& e : graph.edges) {
    int u = polygon.label(e.a);
    int v = polygon.label(e.b);
    if (u > v) std::swap(u, v);
    out.emplace_back(u, v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_dot(const Polygon& polygon, const VisibilityGraph& graph) {
  std::ostringstream os;
  os << "graph V {\n";
  for (auto [u, v] : labeled_edges(polygon, graph)) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace polyassoc
