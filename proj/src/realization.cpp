#include "polyassoc/realization.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <queue>

#include "polyassoc/error.hpp"

namespace polyassoc {

namespace {

void require_plain_polygon(const Polygon& polygon) {
  if (polygon.degenerate()) throw Error(ErrorCode::DegenerateInput, "polygon has collinear vertices");
  if (polygon.has_holes()) throw Error(ErrorCode::HolesUnsupported, "realizations need a polygon without holes");
}

// Counterclockwise triangles of a triangulation, validated.
std::vector<std::array<std::size_t, 3>> triangles_of(const DiagonalCatalog& catalog, const Diagonalization& t) {
  IdSet ids;
  try {
    ids = catalog.ids_of(t);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotATriangulation, e.what());
  }
  if (ids.size() != t.size() || ids.size() != catalog.triangulation_size() || !catalog.is_noncrossing(ids)) {
    throw Error(ErrorCode::NotATriangulation, "diagonal set is not a triangulation");
  }
  std::vector<std::array<std::size_t, 3>> out;
  for (const auto& piece : catalog.pieces(ids)) {
    if (piece.size() != 3) throw Error(ErrorCode::NotATriangulation, "diagonal set leaves a non-triangular piece");
    out.push_back({piece[0], piece[1], piece[2]});
  }
  return out;
}

std::vector<std::size_t> label_order(const Polygon& polygon) {
  std::vector<std::size_t> order(polygon.size());
  for (std::size_t v = 0; v < polygon.size(); ++v) order[static_cast<std::size_t>(polygon.label(v) - 1)] = v;
  return order;
}

// Value at q of the affine interpolation of heights h on triangle (a, b, c).
Rational plane_height(const Point& a, const Point& b, const Point& c, const Rational& ha, const Rational& hb,
                      const Rational& hc, const Point& q) {
  const Rational total = cross(a, b, c);
  return (cross(q, b, c) * ha + cross(a, q, c) * hb + cross(a, b, q) * hc) / total;
}

}  // namespace

Diagonal default_root_edge(const Polygon& polygon) {
  const int n = static_cast<int>(polygon.size());
  return Diagonal::of(*polygon.find_label(n - 1), *polygon.find_label(n));
}

DualTree dual_tree(const Polygon& polygon, const Diagonalization& triangulation, Diagonal root_edge) {
  require_plain_polygon(polygon);
  if (root_edge.a >= polygon.size() || root_edge.b >= polygon.size() || !polygon.adjacent(root_edge.a, root_edge.b)) {
    throw Error(ErrorCode::NotABoundaryEdge, "root edge is not a boundary edge");
  }
  DiagonalCatalog catalog(polygon, Execution::serial);
  DualTree tree;
  tree.root_edge = Diagonal::of(root_edge.a, root_edge.b);
  tree.triangles = triangles_of(catalog, triangulation);
  const std::size_t count = tree.triangles.size();

  std::map<Diagonal, std::vector<std::size_t>> by_edge;
  for (std::size_t t = 0; t < count; ++t) {
    const auto& tri = tree.triangles[t];
    for (int i = 0; i < 3; ++i) by_edge[Diagonal::of(tri[static_cast<std::size_t>(i)], tri[static_cast<std::size_t>((i + 1) % 3)])].push_back(t);
  }
  tree.root = by_edge.at(tree.root_edge).front();

  tree.parent.assign(count, -1);
  tree.children.assign(count, {});
  tree.parent_edge.assign(count, Diagonal{});
  tree.depth.assign(count, 0);
  std::vector<char> seen(count, 0);
  std::queue<std::size_t> q;
  q.push(tree.root);
  seen[tree.root] = 1;
  while (!q.empty()) {
    const auto t = q.front();
    q.pop();
    tree.bfs_order.push_back(t);
    const auto& tri = tree.triangles[t];
    for (int i = 0; i < 3; ++i) {
      const auto e = Diagonal::of(tri[static_cast<std::size_t>(i)], tri[static_cast<std::size_t>((i + 1) % 3)]);
      for (auto u : by_edge[e]) {
        if (seen[u]) continue;
        seen[u] = 1;
        tree.parent[u] = static_cast<std::ptrdiff_t>(t);
        tree.parent_edge[u] = e;
        tree.depth[u] = tree.depth[t] + 1;
        tree.children[t].push_back(u);
        q.push(u);
      }
    }
  }
  tree.subtree_size.assign(count, 1);
  for (auto it = tree.bfs_order.rbegin(); it != tree.bfs_order.rend(); ++it) {
    if (tree.parent[*it] >= 0) tree.subtree_size[static_cast<std::size_t>(tree.parent[*it])] += tree.subtree_size[*it];
  }
  return tree;
}

ThetaAssignment theta_assignment(const DualTree& tree, std::size_t vertex_count) {
  ThetaAssignment out;
  out.theta.resize(tree.triangles.size());
  for (std::size_t t = 0; t < tree.triangles.size(); ++t) {
    Integer value = pow3(static_cast<unsigned>(tree.subtree_size[t] - 1));
    for (auto c : tree.children[t]) value -= pow3(static_cast<unsigned>(tree.subtree_size[c] - 1));
    out.theta[t] = value;
  }
  out.theta_hat.assign(vertex_count, Integer(0));
  for (std::size_t t = 0; t < tree.triangles.size(); ++t) {
    for (auto v : tree.triangles[t]) out.theta_hat[v] = std::max(out.theta_hat[v], out.theta[t]);
  }
  return out;
}

Realization realize(const Polygon& polygon, std::optional<Diagonal> root_edge, const EnumerationOptions& options) {
  require_plain_polygon(polygon);
  Realization out;
  out.root_edge = root_edge ? Diagonal::of(root_edge->a, root_edge->b) : default_root_edge(polygon);
  if (!polygon.adjacent(out.root_edge.a, out.root_edge.b)) {
    throw Error(ErrorCode::NotABoundaryEdge, "root edge is not a boundary edge");
  }
  for (auto v : label_order(polygon)) {
    if (!out.root_edge.touches(v)) out.coordinate_vertices.push_back(v);
  }
  for (auto& t : enumerate_triangulations(polygon, options)) {
    const auto tree = dual_tree(polygon, t, out.root_edge);
    const auto theta = theta_assignment(tree, polygon.size());
    RealizationPoint p;
    p.triangulation = std::move(t);
    for (auto v : out.coordinate_vertices) p.coords.push_back(theta.theta_hat[v]);
    out.points.push_back(std::move(p));
  }
  return out;
}

std::vector<Integer> far_side_indicator(const Polygon& polygon, const Realization& realization, Diagonal d) {
  std::vector<char> arc(polygon.size(), 0);
  bool holds_root = false;
  for (std::size_t v = polygon.next(d.a); v != d.b; v = polygon.next(v)) {
    arc[v] = 1;
    holds_root = holds_root || realization.root_edge.touches(v);
  }
  // Far side: the open arc that avoids the root edge.
  std::vector<Integer> out;
  for (auto v : realization.coordinate_vertices) {
    const bool on_arc = arc[v] != 0;
    const bool far = holds_root ? (!on_arc && !d.touches(v)) : on_arc;
    out.push_back(far ? 1 : 0);
  }
  return out;
}

ExtremalityCertificate extremality_certificate(const Polygon& polygon, const Realization& realization,
                                               std::size_t index) {
  const auto& target = realization.points.at(index);
  ExtremalityCertificate c;
  c.functional.assign(realization.coordinate_vertices.size(), Integer(0));
  for (const auto& d : target.triangulation.diagonals) {
    const auto side = far_side_indicator(polygon, realization, d);
    for (std::size_t i = 0; i < side.size(); ++i) c.functional[i] += side[i];
  }
  auto dot = [&](const std::vector<Integer>& x) {
    Integer s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += c.functional[i] * x[i];
    return s;
  };
  c.value = dot(target.coords);
  bool first = true;
  for (std::size_t j = 0; j < realization.points.size(); ++j) {
    if (j == index) continue;
    const Integer v = dot(realization.points[j].coords);
    if (first || v < c.runner_up) c.runner_up = v;
    first = false;
  }
  if (first) c.runner_up = c.value;
  if (!first && c.runner_up <= c.value) {
    throw Error(ErrorCode::CertificateNotFound, "functional does not separate the realization point");
  }
  return c;
}

std::vector<Rational> area_vector(const Polygon& polygon, const Diagonalization& triangulation) {
  require_plain_polygon(polygon);
  DiagonalCatalog catalog(polygon, Execution::serial);
  std::vector<Rational> phi(polygon.size(), Rational(0));
  for (const auto& tri : triangles_of(catalog, triangulation)) {
    const Rational a = triangle_area(polygon.point(tri[0]), polygon.point(tri[1]), polygon.point(tri[2]));
    for (auto v : tri) phi[static_cast<std::size_t>(polygon.label(v) - 1)] += a;
  }
  return phi;
}

Rational inner(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

namespace {

// <w, phi(T)> for every triangulation, and whether `target` alone attains the
// minimum (or `face` members tie for it).
struct Comparison {
  Rational value;
  Rational runner_up;
  bool ok = false;
};

Comparison compare(const std::vector<Rational>& w, const std::vector<std::vector<Rational>>& phis,
                   const std::vector<char>& inside) {
  Comparison c;
  bool have_in = false, have_out = false, equal = true;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    const Rational v = inner(w, phis[i]);
    if (inside[i]) {
      if (!have_in) {
        c.value = v;
        have_in = true;
      } else if (v != c.value) {
        equal = false;
      }
    } else if (!have_out || v < c.runner_up) {
      c.runner_up = v;
      have_out = true;
    }
  }
  if (!have_out) c.runner_up = c.value;
  c.ok = have_in && equal && (!have_out || c.value < c.runner_up);
  return c;
}

}  // namespace

HeightCertificate height_certificate(const Polygon& polygon, const Diagonalization& triangulation,
                                     const std::vector<Diagonalization>& all, std::optional<Diagonal> root_edge) {
  const auto tree = dual_tree(polygon, triangulation, root_edge ? *root_edge : default_root_edge(polygon));
  const std::size_t n = polygon.size();
  std::vector<std::vector<Rational>> phis;
  std::vector<char> inside;
  for (const auto& t : all) {
    phis.push_back(area_vector(polygon, t));
    inside.push_back(t == triangulation);
  }
  if (std::find(inside.begin(), inside.end(), 1) == inside.end()) {
    phis.push_back(area_vector(polygon, triangulation));
    inside.push_back(1);
  }
  std::vector<std::size_t> position(tree.triangles.size());
  for (std::size_t k = 0; k < tree.bfs_order.size(); ++k) position[tree.bfs_order[k]] = k;

  Integer base = 4;
  for (int attempt = 0; attempt <= 64; ++attempt, base *= 2) {
    // Heights by storage index: the smallest base^k over the vertex's triangles.
    std::vector<Integer> height(n, Integer(-1));
    for (std::size_t t = 0; t < tree.triangles.size(); ++t) {
      const Integer m = pow(base, static_cast<unsigned>(position[t]));
      for (auto v : tree.triangles[t]) {
        if (height[v] < 0 || m < height[v]) height[v] = m;
      }
    }
    // (a) Lifted surface folds upward across every diagonal.
    bool convex = true;
    for (std::size_t t = 0; t < tree.triangles.size() && convex; ++t) {
      if (tree.parent[t] < 0) continue;
      const auto e = tree.parent_edge[t];
      const auto& up = tree.triangles[static_cast<std::size_t>(tree.parent[t])];
      const auto& tri = tree.triangles[t];
      const std::size_t apex_up = *std::find_if(up.begin(), up.end(), [&](auto v) { return !e.touches(v); });
      const std::size_t apex = *std::find_if(tri.begin(), tri.end(), [&](auto v) { return !e.touches(v); });
      const Rational plane = plane_height(polygon.point(e.a), polygon.point(e.b), polygon.point(apex_up),
                                          Rational(height[e.a]), Rational(height[e.b]), Rational(height[apex_up]),
                                          polygon.point(apex));
      convex = Rational(height[apex]) > plane;
    }
    if (!convex) continue;
    // (b) Strictly smallest inner product.
    std::vector<Rational> w(n);
    for (std::size_t v = 0; v < n; ++v) w[static_cast<std::size_t>(polygon.label(v) - 1)] = Rational(height[v]);
    const auto c = compare(w, phis, inside);
    if (!c.ok) continue;
    return HeightCertificate{triangulation, std::move(w), base, c.value, c.runner_up};
  }
  throw Error(ErrorCode::CertificateNotFound, "no height function separated the triangulation");
}

HeightCertificate height_certificate(const Polygon& polygon, const Diagonalization& triangulation,
                                     std::optional<Diagonal> root_edge, const EnumerationOptions& options) {
  return height_certificate(polygon, triangulation, enumerate_triangulations(polygon, options), root_edge);
}

FaceCertificate face_support_certificate(const Polygon& polygon, const std::vector<Diagonalization>& face,
                                         const EnumerationOptions& options) {
  require_plain_polygon(polygon);
  if (face.empty()) throw Error(ErrorCode::NotAFace, "empty set of triangulations");
  DiagonalCatalog catalog(polygon, options.exec);
  for (const auto& t : face) triangles_of(catalog, t);

  // The common diagonals must form a convex diagonalization refined by
  // exactly the given triangulations.
  IdSet common = catalog.ids_of(face.front());
  for (const auto& t : face) {
    const IdSet ids = catalog.ids_of(t);
    IdSet keep;
    std::set_intersection(common.begin(), common.end(), ids.begin(), ids.end(), std::back_inserter(keep));
    common = std::move(keep);
  }
  if (!catalog.is_convex(common)) throw Error(ErrorCode::NotAFace, "common diagonals leave a nonconvex piece");
  std::vector<IdSet> given;
  for (const auto& t : face) given.push_back(catalog.ids_of(t));
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());
  auto refinements = enumerate(catalog, Family::Triangulations, common, options);
  std::sort(refinements.begin(), refinements.end());
  if (refinements != given) throw Error(ErrorCode::NotAFace, "triangulations are not all refinements of one face");

  const auto all = enumerate(catalog, Family::Triangulations, {}, options);
  std::vector<std::vector<Rational>> phis;
  std::vector<char> inside;
  for (const auto& s : all) {
    phis.push_back(area_vector(polygon, catalog.diagonalization(s)));
    inside.push_back(std::binary_search(given.begin(), given.end(), s));
  }

  // Pieces and their adjacency across the common diagonals.
  const auto pieces = catalog.pieces(common);
  const std::size_t n = polygon.size();
  std::map<Diagonal, std::vector<std::size_t>> by_edge;
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    for (std::size_t i = 0; i < pieces[p].size(); ++i) {
      by_edge[Diagonal::of(pieces[p][i], pieces[p][(i + 1) % pieces[p].size()])].push_back(p);
    }
  }
  const Diagonal root_edge = default_root_edge(polygon);
  const std::size_t root = by_edge.at(root_edge).front();

  Integer base = 1;
  for (int attempt = 0; attempt <= 64; ++attempt, base *= 2) {
    // Affine function per piece as (constant, x, y) coefficients. A child
    // adds base^depth times the signed distance function of the shared
    // diagonal, positive on the child's side.
    std::vector<std::array<Rational, 3>> f(pieces.size());
    std::vector<std::size_t> depth(pieces.size(), 0);
    std::vector<char> seen(pieces.size(), 0);
    std::queue<std::size_t> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
      const auto p = q.front();
      q.pop();
      for (std::size_t i = 0; i < pieces[p].size(); ++i) {
        const std::size_t a = pieces[p][i];
        const std::size_t b = pieces[p][(i + 1) % pieces[p].size()];
        for (auto c : by_edge[Diagonal::of(a, b)]) {
          if (seen[c]) continue;
          seen[c] = 1;
          depth[c] = depth[p] + 1;
          // Inside the child the piece runs b -> a, so the child lies left
          // of b->a: l(x, y) = cross(b, a, (x, y)) is positive there.
          const Point& pb = polygon.point(b);
          const Point& pa = polygon.point(a);
          const Rational dx = pa.x - pb.x, dy = pa.y - pb.y;
          // cross(b, a, q) = dx * (q.y - b.y) - dy * (q.x - b.x)
          const Rational scale = Rational(pow(base, static_cast<unsigned>(depth[c])));
          f[c] = {f[p][0] + scale * (-dx * pb.y + dy * pb.x), f[p][1] - scale * dy, f[p][2] + scale * dx};
          q.push(c);
        }
      }
    }
    std::vector<Rational> w(n);
    for (std::size_t p = 0; p < pieces.size(); ++p) {
      for (auto v : pieces[p]) {
        const Point& pt = polygon.point(v);
        w[static_cast<std::size_t>(polygon.label(v) - 1)] = f[p][0] + f[p][1] * pt.x + f[p][2] * pt.y;
      }
    }
    const Rational lowest = *std::min_element(w.begin(), w.end());
    for (auto& x : w) x += 1 - lowest;
    const auto c = compare(w, phis, inside);
    if (!c.ok) continue;
    return FaceCertificate{catalog.diagonalization(common), std::move(w), c.value, c.runner_up};
  }
  throw Error(ErrorCode::CertificateNotFound, "no height function supports the face");
}

std::size_t rank_of(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace detail {

std::vector<HeightCertificate> certificates_serial(const Polygon& polygon, const std::vector<Diagonalization>& all) {
  std::vector<HeightCertificate> out;
  for (const auto& t : all) out.push_back(height_certificate(polygon, t, all));
  return out;
}

std::vector<HeightCertificate> certificates_parallel(const Polygon& polygon, const std::vector<Diagonalization>& all) {
  std::vector<HeightCertificate> out(all.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const long count = static_cast<long>(all.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = height_certificate(polygon, all[static_cast<std::size_t>(i)], all);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace detail

SecondarySummary secondary_polytope_summary(const Polygon& polygon, const EnumerationOptions& options) {
  require_plain_polygon(polygon);
  SecondarySummary s;
  s.area = polygon.area();
  s.triangulations = enumerate_triangulations(polygon, options);
  s.sums_match = true;
  for (const auto& t : s.triangulations) {
    auto phi = area_vector(polygon, t);
    Rational total = 0;
    for (const auto& x : phi) total += x;
    s.sums_match = s.sums_match && total == 3 * s.area;
    s.area_vectors.push_back(std::move(phi));
  }
  auto sorted = s.area_vectors;
  std::sort(sorted.begin(), sorted.end());
  s.distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  s.certificates = options.exec == Execution::serial ? detail::certificates_serial(polygon, s.triangulations)
                                                     : detail::certificates_parallel(polygon, s.triangulations);
  std::vector<std::vector<Rational>> diffs;
  for (std::size_t i = 1; i < s.area_vectors.size(); ++i) {
    std::vector<Rational> d(polygon.size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = s.area_vectors[i][k] - s.area_vectors[0][k];
    diffs.push_back(std::move(d));
  }
  s.affine_rank = rank_of(std::move(diffs));
  return s;
}

}  // namespace polyassoc
