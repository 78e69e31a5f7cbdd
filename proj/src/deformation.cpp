#include "polyassoc/deformation.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>

#include "polyassoc/error.hpp"
#include "polyassoc/visibility.hpp"

namespace polyassoc {

namespace {

void require_plain(const Polygon& polygon) {
  if (polygon.has_holes()) throw Error(ErrorCode::HolesUnsupported, "deformations need a polygon without holes");
  if (polygon.degenerate()) throw Error(ErrorCode::DegenerateInput, "polygon has collinear vertices");
}

std::vector<Point> label_points(const Polygon& polygon) { return polygon.loops_in_label_order().front(); }

Point lerp(const Point& a, const Point& d, const Rational& t) { return {a.x + t * d.x, a.y + t * d.y}; }

using Triple = std::array<std::size_t, 3>;
using Positions = std::function<std::vector<Point>(const Rational&)>;
// Coefficients of a polynomial in t with the sign of orient(i, j, k).
using SignPolynomial = std::function<std::array<Rational, 3>(std::size_t, std::size_t, std::size_t)>;

// Triples' sign polynomials, their roots, and the root clusters with one exact
// sample time in every gap.
struct Sweep {
  std::vector<EventTime> clusters;
  std::vector<std::vector<std::pair<Triple, EventTime>>> members;
  std::vector<Rational> samples;  // samples[k] precedes cluster k
};

Sweep sweep(std::size_t n, const SignPolynomial& poly, const std::function<bool(std::size_t)>& moving) {
  std::vector<std::pair<EventTime, Triple>> roots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!moving(i) && !moving(j) && !moving(k)) continue;
        for (auto& r : isolate_roots(poly(i, j, k))) roots.emplace_back(r, Triple{i, j, k});
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return a.first.lo != b.first.lo ? a.first.lo < b.first.lo : a.first.hi < b.first.hi;
  });
  Sweep s;
  for (auto& [t, triple] : roots) {
    if (!s.clusters.empty() && t.lo <= s.clusters.back().hi) {
      s.clusters.back().hi = std::max(s.clusters.back().hi, t.hi);
    } else {
      s.clusters.push_back(t);
      s.members.emplace_back();
    }
    s.members.back().emplace_back(triple, t);
  }
  s.samples.push_back(0);
  for (std::size_t k = 0; k + 1 < s.clusters.size(); ++k) {
    s.samples.push_back(simplest_between(s.clusters[k].hi, s.clusters[k + 1].lo));
  }
  // No sample after a cluster holding an exact root at 1: the end state has
  // a collinear triple.
  bool ends_degenerate = false;
  if (!s.members.empty()) {
    for (auto& [triple, t] : s.members.back()) ends_degenerate = ends_degenerate || (t.exact() && t.lo == 1);
  }
  if (!ends_degenerate) s.samples.push_back(1);
  return s;
}

// Sign polynomial of a triple under straight-line motion p_i + t * d_i.
std::array<Rational, 3> linear_poly(const std::vector<Point>& p, const std::vector<Point>& d, std::size_t i,
                                    std::size_t j, std::size_t k) {
  const Rational u0x = p[j].x - p[i].x, u0y = p[j].y - p[i].y;
  const Rational v0x = p[k].x - p[i].x, v0y = p[k].y - p[i].y;
  const Rational u1x = d[j].x - d[i].x, u1y = d[j].y - d[i].y;
  const Rational v1x = d[k].x - d[i].x, v1y = d[k].y - d[i].y;
  return {u0x * v0y - u0y * v0x, u0x * v1y + u1x * v0y - u0y * v1x - u1y * v0x, u1x * v1y - u1y * v1x};
}

struct SampleState {
  bool valid = false;
  LabeledEdges edges;
};

SampleState state_at(const std::vector<Point>& pts) {
  SampleState s;
  try {
    s.edges = labeled_visibility(validate_polygon(pts), Execution::serial);
    s.valid = true;
  } catch (const Error&) {
    s.valid = false;
  }
  return s;
}

std::vector<SampleState> states(const Positions& at, const std::vector<Rational>& samples, Execution exec) {
  std::vector<SampleState> out(samples.size());
  if (exec == Execution::serial) {
    for (std::size_t k = 0; k < samples.size(); ++k) out[k] = state_at(at(samples[k]));
    return out;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const long count = static_cast<long>(samples.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = state_at(at(samples[static_cast<std::size_t>(k)]));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::array<int, 3> labels_of(const Triple& t) {
  return {static_cast<int>(t[0]) + 1, static_cast<int>(t[1]) + 1, static_cast<int>(t[2]) + 1};
}

// A collinear triple of the cluster, preferring one through both endpoints.
std::array<int, 3> witness_for(const std::vector<std::pair<Triple, EventTime>>& members, std::pair<int, int> edge) {
  int best_score = -1;
  Triple best{};
  for (const auto& [t, time] : members) {
    int score = 0;
    for (auto v : t) {
      const int label = static_cast<int>(v) + 1;
      if (label == edge.first || label == edge.second) ++score;
    }
    if (score > best_score) {
      best_score = score;
      best = t;
    }
  }
  return labels_of(best);
}

// Gain, loss and touch events for one cluster, given the states around it.
void diff_events(const LabeledEdges& before, const LabeledEdges& after, const EventTime& t,
                 const std::vector<std::pair<Triple, EventTime>>& members, std::vector<DeformationEvent>& out) {
  LabeledEdges gained, lost;
  std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(gained));
  std::set_difference(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(lost));
  if (gained.size() + lost.size() > 1) {
    out.push_back({t, EventKind::GeneralPositionTouch, {0, 0}, labels_of(members.front().first)});
  }
  for (const auto& e : lost) out.push_back({t, EventKind::VisibilityLoss, e, witness_for(members, e)});
  for (const auto& e : gained) out.push_back({t, EventKind::VisibilityGain, e, witness_for(members, e)});
}

}  // namespace

LabeledEdges labeled_visibility(const Polygon& polygon, Execution exec) {
  return labeled_edges(polygon, visibility_graph(polygon, exec));
}

RankReport rank(const Polygon& polygon) {
  RankReport r;
  r.n = polygon.size();
  r.rank = visibility_graph(polygon).edge_count();
  r.min_rank = 2 * r.n - 3;
  r.max_rank = r.n * (r.n - 1) / 2;
  r.height = r.max_rank + 4 - 2 * r.n;
  return r;
}

bool v_equivalent(const Polygon& p1, const Polygon& p2) {
  if (p1.size() != p2.size()) throw Error(ErrorCode::MismatchedN, "polygons have different vertex counts");
  return labeled_visibility(p1) == labeled_visibility(p2);
}

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::VisibilityGain: return "gain";
    case EventKind::VisibilityLoss: return "loss";
    case EventKind::SimplicityViolation: return "simplicity";
    case EventKind::GeneralPositionTouch: return "touch";
  }
  return "touch";
}

std::vector<EventTime> isolate_roots(const std::array<Rational, 3>& c, unsigned width_bits) {
  auto f = [&](const Rational& t) { return c[0] + t * (c[1] + t * c[2]); };
  std::vector<EventTime> out;
  if (c[2] == 0) {
    if (c[1] == 0) return out;
    const Rational t = -c[0] / c[1];
    if (t > 0 && t <= 1) out.push_back({t, t});
    return out;
  }
  const Rational disc = c[1] * c[1] - 4 * c[0] * c[2];
  if (disc >= 0) {
    const Integer num = numerator(disc), den = denominator(disc);
    const Integer rn = sqrt(num), rd = sqrt(den);
    if (rn * rn == num && rd * rd == den) {
      const Rational root = Rational(rn) / Rational(rd);
      const Rational r1 = (-c[1] - root) / (2 * c[2]), r2 = (-c[1] + root) / (2 * c[2]);
      for (const Rational& t : {r1, r2}) {
        if (t > 0 && t <= 1 && (out.empty() || out.back().lo != t)) out.push_back({t, t});
      }
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
      return out;
    }
  }
  std::vector<Rational> cuts{Rational(0)};
  const Rational vertex = -c[1] / (2 * c[2]);
  if (vertex > 0 && vertex < 1) cuts.push_back(vertex);
  cuts.push_back(1);
  const Rational width = Rational(1) / Rational(Integer(1) << width_bits);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rational lo = cuts[i], hi = cuts[i + 1];
    const int sa = sign(f(lo)), sb = sign(f(hi));
    if (sb == 0) {
      out.push_back({hi, hi});
      continue;
    }
    if (sa == 0 || sa == sb) continue;
    bool exact = false;
    while (hi - lo > width) {
      const Rational mid = (lo + hi) / 2;
      const int sm = sign(f(mid));
      if (sm == 0) {
        out.push_back({mid, mid});
        exact = true;
        break;
      }
      (sm == sa ? lo : hi) = mid;
    }
    if (!exact) out.push_back({lo, hi});
  }
  return out;
}

std::vector<Point> Trajectory::at(const Rational& t) const {
  auto pts = start;
  const auto& p = start[static_cast<std::size_t>(vertex - 1)];
  pts[static_cast<std::size_t>(vertex - 1)] = lerp(p, Point{to.x - p.x, to.y - p.y}, t);
  return pts;
}

std::vector<Point> Trajectory::finish() const { return at(truncated_at ? *truncated_at : Rational(1)); }

Trajectory move_vertex(const Polygon& polygon, int label, const Point& target, Execution exec) {
  require_plain(polygon);
  if (label < 1 || label > static_cast<int>(polygon.size())) {
    throw Error(ErrorCode::InvalidInput, "vertex label out of range");
  }
  Trajectory tr;
  tr.start = label_points(polygon);
  tr.vertex = label;
  tr.to = target;
  const std::size_t v = static_cast<std::size_t>(label - 1);
  if (tr.start[v] == target) throw Error(ErrorCode::TargetEqualsVertex, "target equals the current position");

  std::vector<Point> velocity(tr.start.size(), Point{0, 0});
  velocity[v] = {target.x - tr.start[v].x, target.y - tr.start[v].y};
  const auto s = sweep(
      tr.start.size(), [&](auto i, auto j, auto k) { return linear_poly(tr.start, velocity, i, j, k); },
      [&](std::size_t i) { return i == v; });
  const auto st = states([&](const Rational& t) { return tr.at(t); }, s.samples, exec);
  tr.edges_start = st.front().edges;
  tr.edges_end = tr.edges_start;
  for (std::size_t k = 0; k < s.clusters.size(); ++k) {
    const auto& t = s.clusters[k];
    if (k + 1 >= st.size()) {
      // The target itself has a collinear triple.
      tr.events.push_back({t, EventKind::GeneralPositionTouch, {0, 0}, labels_of(s.members[k].front().first)});
      break;
    }
    if (!st[k + 1].valid) {
      tr.events.push_back({t, EventKind::SimplicityViolation, {0, 0}, labels_of(s.members[k].front().first)});
      tr.truncated_at = t.lo;
      break;
    }
    diff_events(st[k].edges, st[k + 1].edges, t, s.members[k], tr.events);
    tr.edges_end = st[k + 1].edges;
  }
  return tr;
}

std::vector<Trajectory> run_moves(const Polygon& polygon, const std::vector<std::pair<int, Point>>& moves,
                                  Execution exec) {
  std::vector<Trajectory> out;
  Polygon current = polygon;
  for (const auto& [label, target] : moves) {
    out.push_back(move_vertex(current, label, target, exec));
    if (out.back().truncated_at) break;
    if (std::any_of(out.back().events.begin(), out.back().events.end(),
                    [](const auto& e) { return e.t.lo == 1 && e.kind == EventKind::GeneralPositionTouch; })) {
      break;
    }
    current = validate_polygon(out.back().finish());
  }
  return out;
}

ChainReport is_monotone_chain(const std::vector<Trajectory>& moves) {
  ChainReport r;
  if (moves.empty()) return r;
  bool gains = false, losses = false;
  std::optional<std::pair<std::size_t, std::size_t>> first_loss;
  for (std::size_t m = 0; m < moves.size(); ++m) {
    if (moves[m].truncated_at) throw Error(ErrorCode::BrokenChain, "a move loses simplicity");
    if (m > 0 && moves[m].start != moves[m - 1].finish()) {
      throw Error(ErrorCode::BrokenChain, "a move does not start where the previous one ended");
    }
    for (std::size_t e = 0; e < moves[m].events.size(); ++e) {
      switch (moves[m].events[e].kind) {
        case EventKind::VisibilityGain:
          gains = true;
          ++r.event_count;
          break;
        case EventKind::VisibilityLoss:
          losses = true;
          ++r.event_count;
          if (!first_loss) first_loss = std::pair{m, e};
          break;
        default:
          r.single_edge_steps = false;
      }
    }
  }
  r.rank_start = moves.front().edges_start.size();
  r.rank_end = moves.back().edges_end.size();
  r.increasing = !(losses && !gains);
  const std::size_t delta = r.rank_end > r.rank_start ? r.rank_end - r.rank_start : r.rank_start - r.rank_end;
  r.monotone = r.single_edge_steps && !(gains && losses) && delta == r.event_count;
  if (gains && losses) r.first_loss = first_loss;
  return r;
}

namespace {

// Ratio mu_i with target = x + mu_i (p_i - x).
std::vector<Rational> ray_ratios(const Point& x, const std::vector<Point>& start, const std::vector<Point>& targets) {
  std::vector<Rational> mu;
  for (std::size_t i = 0; i < start.size(); ++i) {
    const Rational dx = start[i].x - x.x, dy = start[i].y - x.y;
    mu.push_back(((targets[i].x - x.x) * dx + (targets[i].y - x.y) * dy) / (dx * dx + dy * dy));
  }
  return mu;
}

}  // namespace

std::vector<Point> StarDeformation::at(const Rational& t) const {
  std::vector<Point> pts(start.size());
  if (path == StarPath::Linear) {
    for (std::size_t i = 0; i < start.size(); ++i) {
      pts[i] = lerp(start[i], Point{targets[i].x - start[i].x, targets[i].y - start[i].y}, t);
    }
    return pts;
  }
  // 1/|p_i(t) - x| moves linearly from 1/|p_i - x| to 1/|q_i - x|.
  const auto mu = ray_ratios(center, start, targets);
  for (std::size_t i = 0; i < start.size(); ++i) {
    const Rational h = mu[i] / (mu[i] + t * (1 - mu[i]));
    pts[i] = {center.x + h * (start[i].x - center.x), center.y + h * (start[i].y - center.y)};
  }
  return pts;
}

StarDeformation star_deformation(const Polygon& polygon, std::optional<Point> center, StarPath path,
                                 Execution exec) {
  require_plain(polygon);
  const auto k = kernel(polygon);
  if (k.empty()) throw Error(ErrorCode::NotStar, "kernel is empty");
  StarDeformation out;
  out.path = path;
  out.degenerate_kernel = !k.full_dimensional();
  out.center = center ? *center : k.witness();
  const std::size_t n = polygon.size();
  const Point& x = out.center;

  // Squared distance from x to the nearest edge line.
  bool inside = true;
  Rational nearest = -1;
  for (std::size_t v = 0; v < n; ++v) {
    const Point& a = polygon.point(v);
    const Point& b = polygon.point(polygon.next(v));
    const Rational c = cross(a, b, x);
    if (c <= 0) inside = false;
    const Rational d2 = c * c / ((b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y));
    if (nearest < 0 || d2 < nearest) nearest = d2;
  }
  if (center && !inside) throw Error(ErrorCode::NotStar, "center is not inside the kernel");
  out.start = label_points(polygon);
  if (!inside) {
    // Degenerate kernel: fall back to half the distance to the nearest vertex.
    nearest = -1;
    for (const auto& p : out.start) {
      const Rational d2 = (p.x - x.x) * (p.x - x.x) + (p.y - x.y) * (p.y - x.y);
      if (nearest < 0 || d2 < nearest) nearest = d2;
    }
  }
  const int orientation = sign(signed_area(out.start));

  bool found = false;
  for (unsigned bits = 40; bits <= 400 && !found; bits += 20) {
    const Rational radius = sqrt_lower(nearest, bits);
    if (radius == 0) continue;
    out.epsilon = radius / 2;
    out.targets.clear();
    bool usable = true;
    for (const auto& p : out.start) {
      const Rational dx = p.x - x.x, dy = p.y - x.y;
      const Rational scale = sqrt_lower(1 / (dx * dx + dy * dy), bits);
      if (scale == 0) usable = false;
      out.targets.push_back({x.x + out.epsilon * scale * dx, x.y + out.epsilon * scale * dy});
    }
    if (!usable) continue;
    try {
      const auto final_polygon = validate_polygon(out.targets);
      found = is_convex(final_polygon) && sign(signed_area(out.targets)) == orientation;
    } catch (const Error&) {
      found = false;
    }
  }
  if (!found) throw Error(ErrorCode::CertificateNotFound, "no convex target placement found");

  std::vector<Point> velocity(n), rel(n);
  for (std::size_t i = 0; i < n; ++i) {
    velocity[i] = {out.targets[i].x - out.start[i].x, out.targets[i].y - out.start[i].y};
    rel[i] = {out.start[i].x - x.x, out.start[i].y - x.y};
  }
  const auto mu = ray_ratios(x, out.start, out.targets);
  SignPolynomial poly;
  if (path == StarPath::Linear) {
    poly = [&](auto i, auto j, auto k) { return linear_poly(out.start, velocity, i, j, k); };
  } else {
    // With p_i(t) = x + v_i mu_i / D_i(t), D_i = mu_i + t (1 - mu_i) > 0,
    // orient(i, j, k) has the sign of sum over the cyclic triple of
    // cross(v_j, v_k) D_i / mu_i, which is affine in t.
    poly = [&](auto i, auto j, auto k) {
      const Point o{0, 0};
      const Rational ai = cross(o, rel[j], rel[k]), aj = cross(o, rel[k], rel[i]), ak = cross(o, rel[i], rel[j]);
      return std::array<Rational, 3>{ai + aj + ak,
                                     ai * (1 / mu[i] - 1) + aj * (1 / mu[j] - 1) + ak * (1 / mu[k] - 1),
                                     Rational(0)};
    };
  }
  const auto s = sweep(n, poly, [](std::size_t) { return true; });
  const auto st = states([&](const Rational& t) { return out.at(t); }, s.samples, exec);
  out.critical = s.clusters;
  out.samples = s.samples;
  bool all_valid = true;
  for (const auto& state : st) {
    out.sample_edges.push_back(state.edges);
    all_valid = all_valid && state.valid;
  }
  for (std::size_t c = 0; c < s.clusters.size() && c + 1 < st.size(); ++c) {
    if (!st[c + 1].valid) {
      out.events.push_back({s.clusters[c], EventKind::SimplicityViolation, {0, 0},
                            labels_of(s.members[c].front().first)});
      break;
    }
    diff_events(st[c].edges, st[c + 1].edges, s.clusters[c], s.members[c], out.events);
  }
  out.monotone = all_valid && std::none_of(out.events.begin(), out.events.end(), [](const auto& e) {
                   return e.kind == EventKind::VisibilityLoss || e.kind == EventKind::SimplicityViolation;
                 });
  out.final_convex = st.back().valid && is_convex(validate_polygon(out.targets));
  return out;
}

}  // namespace polyassoc
