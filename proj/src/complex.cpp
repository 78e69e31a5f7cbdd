#include "polyassoc/complex.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <map>
#include <mutex>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "polyassoc/error.hpp"

namespace polyassoc {

namespace {

struct IdSetHash {
  std::size_t operator()(const IdSet& s) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : s) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

void require_usable(const Polygon& region) {
  if (region.degenerate()) {
    throw Error(ErrorCode::DegenerateInput, "polygon has collinear vertices");
  }
}

}  // namespace

Diagonalization Diagonalization::of(std::vector<Diagonal> ds) {
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  return Diagonalization{std::move(ds)};
}

DiagonalCatalog::DiagonalCatalog(const Polygon& polygon, Execution exec)
    : polygon_(polygon), diagonals_(all_diagonals(polygon, exec)) {
  const std::size_t n = polygon_.size();
  const std::size_t m = diagonals_.size();
  words_ = (m + 63) / 64;
  id_matrix_.assign(n * n, -1);
  for (std::size_t i = 0; i < m; ++i) {
    id_matrix_[diagonals_[i].a * n + diagonals_[i].b] = static_cast<std::int32_t>(i);
    id_matrix_[diagonals_[i].b * n + diagonals_[i].a] = static_cast<std::int32_t>(i);
  }

  compatible_.assign(m, Bits(words_, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!segments_cross(polygon_, diagonals_[i], diagonals_[j])) {
        set(compatible_[i], j);
        set(compatible_[j], i);
      }
    }
  }

  incident_.assign(n, Bits(words_, 0));
  for (std::size_t i = 0; i < m; ++i) {
    set(incident_[diagonals_[i].a], i);
    set(incident_[diagonals_[i].b], i);
  }
  reflex_ = reflex_vertices(polygon_);

  wedge_.resize(n);
  slot_.assign(n * n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t nx = polygon_.next(v);
    const std::size_t pv = polygon_.prev(v);
    std::vector<Spoke> inner;
    for (std::size_t i = 0; i < m; ++i) {
      const auto& d = diagonals_[i];
      if (d.touches(v)) inner.push_back({d.a == v ? d.b : d.a, static_cast<std::int64_t>(i)});
    }
    // Counterclockwise from v->next; every diagonal lies strictly inside the
    // wedge, so half-plane then orientation gives a total order.
    auto half = [&](std::size_t w) { return polygon_.orient(v, nx, w) > 0 ? 0 : 1; };
    std::sort(inner.begin(), inner.end(), [&](const Spoke& x, const Spoke& y) {
      if (half(x.to) != half(y.to)) return half(x.to) < half(y.to);
      return polygon_.orient(v, x.to, y.to) > 0;
    });
    auto& w = wedge_[v];
    w.push_back({nx, -1});
    w.insert(w.end(), inner.begin(), inner.end());
    w.push_back({pv, -1});
    for (std::size_t k = 0; k < w.size(); ++k) slot_[v * n + w[k].to] = static_cast<std::int32_t>(k);
  }
}

std::size_t DiagonalCatalog::triangulation_size() const {
  return polygon_.size() + 3 * polygon_.hole_count() - 3;
}

std::optional<DiagonalId> DiagonalCatalog::id_of(std::size_t u, std::size_t v) const {
  const std::size_t n = polygon_.size();
  if (u >= n || v >= n) return std::nullopt;
  const auto id = id_matrix_[u * n + v];
  if (id < 0) return std::nullopt;
  return static_cast<DiagonalId>(id);
}

IdSet DiagonalCatalog::ids_of(const Diagonalization& d) const {
  IdSet out;
  for (const auto& e : d.diagonals) {
    auto id = id_of(e.a, e.b);
    if (!id) {
      throw Error(ErrorCode::NotADiagonal, "{" + std::to_string(polygon_.label(e.a)) + "," +
                                               std::to_string(polygon_.label(e.b)) +
                                               "} is not a diagonal");
    }
    out.push_back(*id);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Diagonalization DiagonalCatalog::diagonalization(const IdSet& ids) const {
  Diagonalization d;
  for (auto id : ids) d.diagonals.push_back(diagonals_[id]);
  std::sort(d.diagonals.begin(), d.diagonals.end());
  return d;
}

bool DiagonalCatalog::is_noncrossing(const IdSet& ids) const {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (crosses(ids[i], ids[j])) return false;
    }
  }
  return true;
}

bool DiagonalCatalog::corners_convex(const std::vector<char>& member) const {
  for (std::size_t v = 0; v < wedge_.size(); ++v) {
    const auto& w = wedge_[v];
    std::size_t last = w.front().to;
    for (std::size_t k = 1; k < w.size(); ++k) {
      if (w[k].id >= 0 && !member[static_cast<std::size_t>(w[k].id)]) continue;
      if (polygon_.orient(v, last, w[k].to) <= 0) return false;
      last = w[k].to;
    }
  }
  return true;
}

bool DiagonalCatalog::is_convex(const IdSet& ids) const {
  std::vector<char> member(size(), 0);
  for (auto id : ids) member[id] = 1;
  return corners_convex(member);
}

std::vector<std::vector<std::size_t>> DiagonalCatalog::pieces(const IdSet& ids) const {
  const std::size_t n = polygon_.size();
  std::vector<char> member(size(), 0);
  for (auto id : ids) member[id] = 1;

  // Interior half-edges: boundary edges in loop direction, chosen diagonals
  // both ways. Keyed as u * n + v.
  std::vector<char> used(n * n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> starts;
  for (std::size_t v = 0; v < n; ++v) starts.emplace_back(v, polygon_.next(v));
  for (auto id : ids) {
    starts.emplace_back(diagonals_[id].a, diagonals_[id].b);
    starts.emplace_back(diagonals_[id].b, diagonals_[id].a);
  }

  auto step = [&](std::size_t u, std::size_t v) {
    // Active spoke at v immediately clockwise of v->u.
    const auto& w = wedge_[v];
    for (auto k = slot_[v * n + u] - 1; k >= 0; --k) {
      const auto& s = w[static_cast<std::size_t>(k)];
      if (s.id < 0 || member[static_cast<std::size_t>(s.id)]) return s.to;
    }
    throw Error(ErrorCode::InvalidInput, "piece traversal left the region");
  };

  std::vector<std::vector<std::size_t>> out;
  for (auto [u0, v0] : starts) {
    if (used[u0 * n + v0]) continue;
    std::vector<std::size_t> cycle;
    std::size_t u = u0, v = v0;
    while (!used[u * n + v]) {
      used[u * n + v] = 1;
      cycle.push_back(u);
      const std::size_t w = step(u, v);
      u = v;
      v = w;
    }
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    out.push_back(std::move(cycle));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Bits = DiagonalCatalog::Bits;

struct SharedState {
  const DiagonalCatalog& catalog;
  Family family;
  const EnumerationOptions& options;
  std::size_t target;
  std::atomic<std::size_t> emitted{0};
  std::atomic<bool> stop{false};
};

class Walker {
 public:
  Walker(SharedState& shared, const IdSet& base)
      : s_(shared), cat_(shared.catalog), current_(base), member_(cat_.size(), 0),
        cover_(cat_.polygon().size(), 0) {
    for (auto id : base) push_marks(id, +1);
  }

  std::vector<IdSet> out;

  /// Emits the current set if it qualifies and reports whether its subtree
  /// can contain anything.
  bool visit_root(const Bits& allowed) {
    if (!viable(allowed)) return false;
    maybe_emit();
    return true;
  }

  void descend(const Bits& allowed, DiagonalId after, bool first) {
    for (std::size_t w = 0; w < allowed.size(); ++w) {
      std::uint64_t word = allowed[w];
      if (!first) {
        const std::size_t lo = after + 1;
        if (w * 64 + 63 < lo) continue;
        if (w * 64 < lo) word &= ~std::uint64_t{0} << (lo - w * 64);
      }
      while (word) {
        const std::size_t c = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        child(allowed, static_cast<DiagonalId>(c));
        if (s_.stop.load(std::memory_order_relaxed)) return;
      }
    }
  }

  void child(const Bits& allowed, DiagonalId c) {
    if (s_.stop.load(std::memory_order_relaxed)) return;
    if ((++nodes_ & 0xFFF) == 0 && s_.options.deadline &&
        std::chrono::steady_clock::now() > *s_.options.deadline) {
      throw Error(ErrorCode::Timeout, "enumeration exceeded its time budget");
    }
    Bits next(allowed.size());
    const auto& compat = cat_.compatible(c);
    for (std::size_t w = 0; w < allowed.size(); ++w) next[w] = allowed[w] & compat[w];
    // Only larger ids remain choosable below this node.
    const std::size_t lo = static_cast<std::size_t>(c) + 1;
    for (std::size_t w = 0; w < next.size(); ++w) {
      if (w * 64 + 63 < lo) {
        next[w] = 0;
      } else if (w * 64 < lo) {
        next[w] &= ~std::uint64_t{0} << (lo - w * 64);
      }
    }
    current_.push_back(c);
    push_marks(c, +1);
    if (viable(next)) {
      maybe_emit();
      descend(next, c, false);
    }
    push_marks(c, -1);
    current_.pop_back();
  }

 private:
  void push_marks(DiagonalId id, int delta) {
    member_[id] = static_cast<char>(delta > 0);
    cover_[cat_.diagonal(id).a] += delta;
    cover_[cat_.diagonal(id).b] += delta;
  }

  bool viable(const Bits& allowed) const {
    switch (s_.family) {
      case Family::Noncrossing:
        return true;
      case Family::Triangulations: {
        std::size_t free = 0;
        for (auto w : allowed) free += static_cast<std::size_t>(std::popcount(w));
        return current_.size() + free >= s_.target;
      }
      case Family::Convex:
        // Every reflex vertex needs an incident diagonal, now or later.
        for (auto r : cat_.reflex()) {
          if (cover_[r] > 0) continue;
          const auto& inc = cat_.incident(r);
          bool any = false;
          for (std::size_t w = 0; w < allowed.size() && !any; ++w) any = (allowed[w] & inc[w]) != 0;
          if (!any) return false;
        }
        return true;
    }
    return true;
  }

  void maybe_emit() {
    bool ok = false;
    switch (s_.family) {
      case Family::Noncrossing:
        ok = true;
        break;
      case Family::Triangulations:
        ok = current_.size() == s_.target;
        break;
      case Family::Convex:
        ok = std::all_of(cat_.reflex().begin(), cat_.reflex().end(), [&](std::size_t r) { return cover_[r] > 0; }) &&
             cat_.corners_convex(member_);
        break;
    }
    if (!ok) return;
    const std::size_t count = s_.emitted.fetch_add(1) + 1;
    if (count > s_.options.cap) {
      s_.stop = true;
      throw RegionTooLarge(s_.options.cap, count);
    }
    IdSet sorted = current_;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
  }

  SharedState& s_;
  const DiagonalCatalog& cat_;
  IdSet current_;
  std::vector<char> member_;
  std::vector<int> cover_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::vector<IdSet> enumerate(const DiagonalCatalog& catalog, Family family, const IdSet& base,
                             const EnumerationOptions& options) {
  require_usable(catalog.polygon());
  if (!catalog.is_noncrossing(base)) {
    throw Error(ErrorCode::CrossingDiagonals, "base set contains crossing diagonals");
  }
  SharedState shared{catalog, family, options, catalog.triangulation_size()};

  Bits allowed(catalog.words(), ~std::uint64_t{0});
  if (catalog.size() % 64 != 0 && !allowed.empty()) {
    allowed.back() = (std::uint64_t{1} << (catalog.size() % 64)) - 1;
  }
  for (auto id : base) {
    const auto& c = catalog.compatible(id);
    for (std::size_t w = 0; w < allowed.size(); ++w) allowed[w] &= c[w];
  }

  Walker root(shared, base);
  if (!root.visit_root(allowed)) return {};

  std::vector<DiagonalId> children;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (DiagonalCatalog::test(allowed, i)) children.push_back(static_cast<DiagonalId>(i));
  }

  if (options.exec == Execution::serial || children.size() < 2) {
    root.descend(allowed, 0, true);
    return std::move(root.out);
  }

  std::vector<std::vector<IdSet>> parts(children.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const long count = static_cast<long>(children.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    if (shared.stop.load()) continue;
    try {
      Walker w(shared, base);
      w.child(allowed, children[static_cast<std::size_t>(k)]);
      parts[static_cast<std::size_t>(k)] = std::move(w.out);
    } catch (...) {
      shared.stop = true;
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<IdSet> out = std::move(root.out);
  for (auto& p : parts) {
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  return out;
}

std::vector<Diagonalization> enumerate_triangulations(const Polygon& region, const EnumerationOptions& options) {
  DiagonalCatalog catalog(region, options.exec);
  std::vector<Diagonalization> out;
  for (const auto& s : enumerate(catalog, Family::Triangulations, {}, options)) {
    out.push_back(catalog.diagonalization(s));
  }
  return out;
}

bool is_convex_diagonalization(const Polygon& region, const Diagonalization& d) {
  require_usable(region);
  DiagonalCatalog catalog(region, Execution::serial);
  const IdSet ids = catalog.ids_of(d);
  if (!catalog.is_noncrossing(ids)) {
    throw Error(ErrorCode::CrossingDiagonals, "diagonalization contains crossing diagonals");
  }
  return catalog.is_convex(ids);
}

std::vector<std::size_t> ComplexKP::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(std::max(dim, 0)) + 1, 0);
  for (const auto& face : faces) ++f[static_cast<std::size_t>(face.dim)];
  return f;
}

long ComplexKP::euler_characteristic() const {
  long chi = 0;
  for (const auto& face : faces) chi += (face.dim % 2 == 0) ? 1 : -1;
  return chi;
}

std::optional<std::size_t> ComplexKP::find(const Diagonalization& d) const {
  auto it = std::lower_bound(faces.begin(), faces.end(), d, [](const Face& f, const Diagonalization& key) {
    if (f.diagonalization.size() != key.size()) return f.diagonalization.size() < key.size();
    return f.diagonalization < key;
  });
  if (it != faces.end() && it->diagonalization == d) return static_cast<std::size_t>(it - faces.begin());
  return std::nullopt;
}

std::vector<std::size_t> ComplexKP::maximal_faces() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].maximal) out.push_back(i);
  }
  return out;
}

namespace {

struct ConvexFaces {
  std::vector<IdSet> sets;  // sorted by (size, lex)
  std::unordered_map<IdSet, std::size_t, IdSetHash> index;
};

ConvexFaces convex_faces(const DiagonalCatalog& catalog, const EnumerationOptions& options) {
  ConvexFaces out;
  out.sets = enumerate(catalog, Family::Convex, {}, options);
  std::stable_sort(out.sets.begin(), out.sets.end(),
                   [](const IdSet& x, const IdSet& y) { return x.size() < y.size(); });
  for (std::size_t i = 0; i < out.sets.size(); ++i) out.index.emplace(out.sets[i], i);
  return out;
}

}  // namespace

ComplexKP build_complex(const Polygon& region, const EnumerationOptions& options) {
  require_usable(region);
  DiagonalCatalog catalog(region, options.exec);
  const ConvexFaces cf = convex_faces(catalog, options);
  const std::size_t target = catalog.triangulation_size();

  ComplexKP k;
  k.n = region.size();
  k.h = region.hole_count();
  k.dP = cf.sets.empty() ? 0 : cf.sets.front().size();
  k.dim = static_cast<int>(target) - static_cast<int>(k.dP);
  k.faces.reserve(cf.sets.size());
  for (const auto& s : cf.sets) {
    k.faces.push_back({catalog.diagonalization(s), static_cast<int>(target - s.size()), true});
  }
  // In (a, b) order ids and diagonals sort identically, so faces are already
  // in canonical order. Covers come from dropping one diagonal at a time.
  for (std::size_t i = 0; i < cf.sets.size(); ++i) {
    const auto& s = cf.sets[i];
    for (std::size_t j = 0; j < s.size(); ++j) {
      IdSet smaller = s;
      smaller.erase(smaller.begin() + static_cast<long>(j));
      auto it = cf.index.find(smaller);
      if (it != cf.index.end()) {
        k.covers.emplace_back(it->second, i);
        k.faces[i].maximal = false;
      }
    }
  }
  std::sort(k.covers.begin(), k.covers.end());
  return k;
}

MinimalDiagonalizations minimal_convex_diagonalizations(const Polygon& region, const EnumerationOptions& options) {
  const ComplexKP k = build_complex(region, options);
  MinimalDiagonalizations out;
  out.d = k.dP;
  for (auto i : k.maximal_faces()) out.sets.push_back(k.faces[i].diagonalization);
  return out;
}

namespace {

std::vector<std::size_t> multiply(const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
  std::vector<std::size_t> out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  return out;
}

std::vector<Point> convex_position(std::size_t n) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const long x = static_cast<long>(i);
    pts.push_back({Rational(x), Rational(x * x)});
  }
  return pts;
}

}  // namespace

std::vector<std::size_t> associahedron_f_vector(int m) {
  if (m < 3) throw Error(ErrorCode::TooFewVertices, "associahedron needs at least a triangle");
  const Polygon q = validate_polygon(convex_position(static_cast<std::size_t>(m)));
  DiagonalCatalog catalog(q, Execution::serial);
  std::vector<std::size_t> f(static_cast<std::size_t>(m - 2), 0);
  EnumerationOptions opts;
  opts.exec = Execution::serial;
  for (const auto& s : enumerate(catalog, Family::Noncrossing, {}, opts)) {
    ++f[static_cast<std::size_t>(m - 3) - s.size()];
  }
  return f;
}

FaceFactorization face_factorization(const Polygon& region, const Diagonalization& d,
                                     const EnumerationOptions& options) {
  require_usable(region);
  DiagonalCatalog catalog(region, options.exec);
  const IdSet ids = catalog.ids_of(d);
  if (!catalog.is_noncrossing(ids)) {
    throw Error(ErrorCode::CrossingDiagonals, "diagonalization contains crossing diagonals");
  }
  if (!catalog.is_convex(ids)) {
    throw Error(ErrorCode::NotConvexDiagonalization, "diagonalization has a nonconvex piece");
  }
  FaceFactorization out;
  out.pieces = catalog.pieces(ids);
  for (const auto& p : out.pieces) out.edge_counts.push_back(p.size());

  const std::size_t target = catalog.triangulation_size();
  const std::size_t face_dim = target - ids.size();
  out.face_f_vector.assign(face_dim + 1, 0);
  for (const auto& s : enumerate(catalog, Family::Convex, ids, options)) {
    ++out.face_f_vector[target - s.size()];
  }
  out.product_f_vector = {1};
  for (auto m : out.edge_counts) {
    out.product_f_vector = multiply(out.product_f_vector, associahedron_f_vector(static_cast<int>(m)));
  }
  out.matches = out.product_f_vector == out.face_f_vector;
  return out;
}

FlipGraph flip_graph(const Polygon& region, const EnumerationOptions& options) {
  require_usable(region);
  DiagonalCatalog catalog(region, options.exec);
  const auto sets = enumerate(catalog, Family::Triangulations, {}, options);
  FlipGraph g;
  for (const auto& s : sets) g.nodes.push_back(catalog.diagonalization(s));

  // Two triangulations are a flip apart iff they agree after dropping one
  // diagonal each.
  std::unordered_map<IdSet, std::vector<std::size_t>, IdSetHash> groups;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets[i].size(); ++j) {
      IdSet key = sets[i];
      key.erase(key.begin() + static_cast<long>(j));
      groups[std::move(key)].push_back(i);
    }
  }
  for (const auto& [key, members] : groups) {
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y) g.arcs.emplace_back(members[x], members[y]);
  }
  std::sort(g.arcs.begin(), g.arcs.end());

  std::vector<std::vector<std::size_t>> adj(sets.size());
  for (auto [a, b] : g.arcs) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(sets.size(), 0);
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (seen[s]) continue;
    ++g.components;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      auto u = q.front();
      q.pop();
      for (auto v : adj[u]) {
        if (!seen[v]) {
          seen[v] = 1;
          q.push(v);
        }
      }
    }
  }
  return g;
}

std::string to_dot(const FlipGraph& graph) {
  std::ostringstream os;
  os << "graph F {\n";
  for (auto [a, b] : graph.arcs) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

ThetaComplex theta_complex(const Polygon& region, const EnumerationOptions& options) {
  require_usable(region);
  DiagonalCatalog catalog(region, options.exec);
  ThetaComplex t;
  t.vertices = catalog.diagonals();
  t.facet_size = catalog.triangulation_size();
  t.convex_input = !region.has_holes() && is_convex(region);
  auto sets = enumerate(catalog, Family::Noncrossing, {}, options);
  t.pure = true;
  for (auto& s : sets) {
    if (s.empty()) continue;
    if (s.size() == t.facet_size) ++t.facet_count;
    // A simplex is maximal iff nothing else is compatible with all of it.
    Bits free(catalog.words(), ~std::uint64_t{0});
    for (auto id : s) {
      const auto& c = catalog.compatible(id);
      for (std::size_t w = 0; w < free.size(); ++w) free[w] &= c[w];
    }
    for (auto id : s) free[id >> 6] &= ~(std::uint64_t{1} << (id & 63));
    if (catalog.size() % 64 != 0 && !free.empty()) free.back() &= (std::uint64_t{1} << (catalog.size() % 64)) - 1;
    const bool maximal = std::all_of(free.begin(), free.end(), [](auto w) { return w == 0; });
    if (maximal && s.size() != t.facet_size) t.pure = false;
    t.complex.simplices.push_back(std::move(s));
  }
  t.homology = reduced_homology(t.complex);
  return t;
}

std::vector<std::pair<int, int>> label_image(const Polygon& polygon, const Diagonalization& d) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : d.diagonals) {
    const int x = polygon.label(e.a);
    const int y = polygon.label(e.b);
    out.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool labels_interleave(std::pair<int, int> x, std::pair<int, int> y) {
  auto [a, b] = std::minmax(x.first, x.second);
  auto [c, e] = std::minmax(y.first, y.second);
  return (a < c && c < b && b < e) || (c < a && a < e && e < b);
}

FacetRemoval facet_removal(const Polygon& polygon, const EnumerationOptions& options) {
  require_usable(polygon);
  if (polygon.has_holes()) throw Error(ErrorCode::HolesUnsupported, "facet removal needs a polygon without holes");
  const std::size_t n = polygon.size();
  const Polygon q = validate_polygon(convex_position(n));
  DiagonalCatalog qc(q, options.exec);
  DiagonalCatalog pc(polygon, options.exec);

  // Q's storage index i carries label i + 1.
  auto p_vertex = [&](std::size_t qi) { return *polygon.find_label(static_cast<int>(qi) + 1); };
  std::vector<DiagonalId> bad;
  for (DiagonalId i = 0; i < qc.size(); ++i) {
    const auto& d = qc.diagonal(i);
    if (!pc.id_of(p_vertex(d.a), p_vertex(d.b))) bad.push_back(i);
  }

  FacetRemoval out;
  for (auto b : bad) out.removed_diagonals.emplace_back(static_cast<int>(qc.diagonal(b).a) + 1,
                                                        static_cast<int>(qc.diagonal(b).b) + 1);

  for (const auto& s : enumerate(qc, Family::Noncrossing, {}, options)) {
    // Kept iff every bad diagonal crosses something in s.
    const bool kept = std::all_of(bad.begin(), bad.end(), [&](DiagonalId b) {
      return std::any_of(s.begin(), s.end(), [&](DiagonalId x) { return qc.crosses(b, x); });
    });
    if (!kept) {
      ++out.removed_faces;
      continue;
    }
    std::vector<Diagonal> ds;
    for (auto x : s) ds.push_back(Diagonal::of(p_vertex(qc.diagonal(x).a), p_vertex(qc.diagonal(x).b)));
    out.kept.push_back(Diagonalization::of(std::move(ds)));
  }
  std::sort(out.kept.begin(), out.kept.end(), [](const Diagonalization& x, const Diagonalization& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });

  // Removed facets meet iff their diagonals do not cross; the removed part
  // is connected iff that graph is.
  if (bad.empty()) {
    out.removed_connected = true;
  } else {
    std::vector<char> seen(bad.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < bad.size(); ++v) {
        if (!seen[v] && !qc.crosses(bad[u], bad[v])) {
          seen[v] = 1;
          ++reached;
          stack.push_back(v);
        }
      }
    }
    out.removed_connected = reached == bad.size();
  }
  return out;
}

namespace {

struct SplitAttempt {
  Polygon polygon;
  std::vector<std::size_t> to_region;
};

Rational approx_length(const Point& a, const Point& b) {
  const Rational sq = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
  for (unsigned bits = 24;; bits += 24) {
    Rational r = sqrt_lower(sq, bits);
    if (r.sign() > 0) return r;
  }
}

// A point at distance about `step` from v along the bisector of the wedge
// swept counterclockwise from v->a to v->b. From there both a and b are in
// sight whenever v sees them, even when the wedge is reflex.
Point into_wedge(const Point& v, const Point& a, const Point& b, const Rational& step) {
  const Rational la = approx_length(v, a);
  const Rational lb = approx_length(v, b);
  Rational dx = (a.x - v.x) / la + (b.x - v.x) / lb;
  Rational dy = (a.y - v.y) / la + (b.y - v.y) / lb;
  const int turn = orient(v, a, b);
  if (turn < 0) {
    dx = -dx;
    dy = -dy;
  } else if (turn == 0) {
    dx = -(a.y - v.y) / la;
    dy = (a.x - v.x) / la;
  }
  return Point{v.x + step * dx, v.y + step * dy};
}

std::optional<SplitAttempt> try_split(const Polygon& region, std::size_t o, std::size_t hv, int k) {
  const Point& po = region.point(o);
  const Point& ph = region.point(hv);
  const Rational step = approx_length(po, ph) / (Integer(1) << k);

  // o and h each become two vertices, one in each half of their wedge as
  // cut by the bridge.
  std::vector<Point> pts;
  std::vector<std::size_t> map;
  pts.push_back(into_wedge(po, region.point(region.next(o)), ph, step));
  map.push_back(o);
  for (std::size_t v = region.next(o); v != o; v = region.next(v)) {
    pts.push_back(region.point(v));
    map.push_back(v);
  }
  pts.push_back(into_wedge(po, ph, region.point(region.prev(o)), step));
  map.push_back(o);
  pts.push_back(into_wedge(ph, region.point(region.next(hv)), po, step));
  map.push_back(hv);
  for (std::size_t v = region.next(hv); v != hv; v = region.next(v)) {
    pts.push_back(region.point(v));
    map.push_back(v);
  }
  pts.push_back(into_wedge(ph, po, region.point(region.prev(hv)), step));
  map.push_back(hv);
  try {
    Polygon split = validate_polygon(pts);
    if (split.label(1) != 2) return std::nullopt;  // normalized from clockwise: wrong geometry
    return SplitAttempt{std::move(split), std::move(map)};
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

HoleSplit hole_split(const Polygon& region, Diagonal d, const EnumerationOptions& options) {
  require_usable(region);
  if (region.hole_count() != 1) throw Error(ErrorCode::InvalidInput, "hole_split needs a region with one hole");
  const bool a_outer = region.loop_of(d.a) == 0;
  const bool b_outer = region.loop_of(d.b) == 0;
  if (a_outer == b_outer) {
    throw Error(ErrorCode::NotABridgeDiagonal, "diagonal does not join the outer boundary to the hole");
  }
  DiagonalCatalog rc(region, options.exec);
  const auto bridge_id = rc.id_of(d.a, d.b);
  if (!bridge_id) throw Error(ErrorCode::NotADiagonal, "bridge is not a diagonal of the region");
  const std::size_t o = a_outer ? d.a : d.b;
  const std::size_t hv = a_outer ? d.b : d.a;

  // Region diagonals compatible with the bridge, as (u, v) region pairs.
  std::vector<Diagonal> expected;
  for (DiagonalId i = 0; i < rc.size(); ++i) {
    if (i != *bridge_id && !rc.crosses(i, *bridge_id)) expected.push_back(rc.diagonal(i));
  }

  for (int k = 2; k <= 64; ++k) {
    auto attempt = try_split(region, o, hv, k);
    if (!attempt) continue;
    const Polygon& sp = attempt->polygon;
    const auto& map = attempt->to_region;
    // Visibility of the split polygon, read through the label map, must be
    // the bridge-compatible diagonals of the region, each hit once.
    std::vector<Diagonal> seen;
    bool extra = false;
    for (const auto& e : all_diagonals(sp, options.exec)) {
      const std::size_t u = map[e.a];
      const std::size_t v = map[e.b];
      if (u == v || Diagonal::of(u, v) == Diagonal::of(o, hv)) {
        extra = true;
        break;
      }
      seen.push_back(Diagonal::of(u, v));
    }
    if (extra) continue;
    // Same orientation of every triple of distinct region vertices, so
    // corner convexity reads the same on both sides.
    bool same_order = true;
    const std::size_t sn = sp.size();
    for (std::size_t x = 0; x < sn && same_order; ++x)
      for (std::size_t y = x + 1; y < sn && same_order; ++y)
        for (std::size_t z = y + 1; z < sn && same_order; ++z) {
          if (map[x] == map[y] || map[y] == map[z] || map[x] == map[z]) continue;
          same_order = sp.orient(x, y, z) == region.orient(map[x], map[y], map[z]);
        }
    if (!same_order) continue;
    std::sort(seen.begin(), seen.end());
    if (seen != expected) continue;

    HoleSplit out{sp, map, Diagonal::of(o, hv), k, false, 0};

    // Combinatorial check of the bijection.
    DiagonalCatalog sc(sp, options.exec);
    std::vector<IdSet> mapped;
    for (const auto& s : enumerate(sc, Family::Convex, {}, options)) {
      IdSet r{*bridge_id};
      for (auto id : s) {
        const auto& e = sc.diagonal(id);
        r.push_back(*rc.id_of(map[e.a], map[e.b]));
      }
      std::sort(r.begin(), r.end());
      mapped.push_back(std::move(r));
    }
    auto above = enumerate(rc, Family::Convex, {*bridge_id}, options);
    std::sort(mapped.begin(), mapped.end());
    std::sort(above.begin(), above.end());
    out.bijection_verified = mapped == above;
    out.matched = mapped.size();
    return out;
  }
  throw Error(ErrorCode::CertificateNotFound, "no slit width preserved the region's visibility");
}

}  // namespace polyassoc
