// One PASS/FAIL line per acceptance criterion. Every count is exact; time
// limits are wall-clock on the whole criterion. Exit status is the number of
// failing lines.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "polyassoc/complex.hpp"
#include "polyassoc/deformation.hpp"
#include "polyassoc/error.hpp"
#include "polyassoc/realization.hpp"
#include "random_polygons.hpp"

using namespace polyassoc;
using fixtures::pt;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      detail << what << "; ";
      pass = false;
    }
  }
};

int failures = 0;

void criterion(const char* name, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("threw ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > limit_seconds) out.require(false, "over time limit");
  if (!out.pass) ++failures;
  std::printf("%s  %-26s %6.2fs (limit %gs)  %s\n", out.pass ? "PASS" : "FAIL", name, seconds, limit_seconds,
              out.detail.str().c_str());
  std::fflush(stdout);
}

Diagonalization by_labels(const Polygon& p, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Diagonal> ds;
  for (auto [x, y] : pairs) ds.push_back(Diagonal::of(*p.find_label(x), *p.find_label(y)));
  return Diagonalization::of(ds);
}

bool refines(const Diagonalization& t, const Diagonalization& d) {
  return std::includes(t.diagonals.begin(), t.diagonals.end(), d.diagonals.begin(), d.diagonals.end());
}

std::vector<std::size_t> piece_sizes(const Polygon& p, const Diagonalization& d) {
  DiagonalCatalog cat(p, Execution::serial);
  std::vector<std::size_t> sizes;
  for (const auto& piece : cat.pieces(cat.ids_of(d))) sizes.push_back(piece.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

long alternating_face_sum(const ComplexKP& k) {
  long s = 0;
  for (const Face& f : k.faces) s += f.dim % 2 == 0 ? 1 : -1;
  return s;
}

// 1-skeleton read off the face poset: each edge face joins the two
// triangulations covering it.
std::set<std::pair<std::size_t, std::size_t>> one_skeleton(const ComplexKP& k, const FlipGraph& g) {
  std::map<Diagonalization, std::size_t> node;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) node[g.nodes[i]] = i;
  std::map<std::size_t, std::vector<std::size_t>> ends;
  for (auto [a, b] : k.covers) {
    if (k.faces[a].dim == 1) ends[a].push_back(node.at(k.faces[b].diagonalization));
  }
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (auto& [face, e] : ends) {
    if (e.size() == 2) out.emplace(std::min(e[0], e[1]), std::max(e[0], e[1]));
  }
  return out;
}

std::size_t affine_rank_oracle(const std::vector<std::vector<Rational>>& points) {
  if (points.size() < 2) return 0;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < points.size(); ++i) {
    std::vector<Rational> r(points[i].size());
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = points[i][j] - points[0][j];
    rows.push_back(std::move(r));
  }
  std::size_t rank = 0;
  const std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<Polygon> random_polygons(unsigned seed, int count, int min_n, int max_n, bool nonconvex) {
  std::mt19937 rng(seed);
  std::vector<Polygon> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(testing_support::random_simple_polygon(rng, min_n + i % (max_n - min_n + 1), nonconvex));
  }
  return out;
}

// An 8-gon whose complex has six maximal faces: four squares and two K6.
Polygon squares_and_k6_octagon() { return fixtures::polygon({{6, 3}, {7, 6}, {4, 6}, {0, 7}, {1, 3}, {0, 1}, {4, 1}, {6, 0}}); }

}  // namespace

int main() {
  std::printf("acceptance: exact predicates throughout; tolerance 0 except event isolation width 2^-60\n");

  criterion("catalan-counts", 10, [](Outcome& o) {
    for (int n = 4; n <= 10; ++n) {
      const auto ts = enumerate_triangulations(fixtures::convex(n));
      o.require(Integer(ts.size()) == oracles::catalan(n - 2), "n=" + std::to_string(n));
      o.detail << ts.size() << (n < 10 ? "," : "");
    }
  });

  criterion("associahedron-structure", 30, [](Outcome& o) {
    for (int n = 5; n <= 7; ++n) {
      const Polygon p = fixtures::convex(n);
      const ComplexKP k = build_complex(p);
      const std::string tag = "n=" + std::to_string(n);
      o.require(k.dim == n - 3, tag + " dim");
      o.require(k.maximal_faces().size() == 1, tag + " unique maximal face");
      o.require(alternating_face_sum(k) == 1, tag + " alternating sum");
      const auto f = k.f_vector();
      for (int j = 0; j <= n - 3; ++j) {
        // f-vector by dimension; a face of dimension i has n - 3 - i diagonals.
        const auto dim = static_cast<std::size_t>(n - 3 - j);
        o.require(dim < f.size() && Integer(f[dim]) == oracles::kirkman_cayley(n, j), tag + " f-vector");
      }
      const FlipGraph g = flip_graph(p);
      std::vector<std::size_t> degree(g.nodes.size(), 0);
      for (auto [a, b] : g.arcs) ++degree[a], ++degree[b];
      o.require(std::all_of(degree.begin(), degree.end(), [&](std::size_t d) { return d == std::size_t(n - 3); }),
                tag + " flip degree");
      o.require(g.connected(), tag + " flip graph connected");
    }
    o.detail << "n=5,6,7 dim n-3, one maximal face, sum 1, degree n-3";
  });

  const auto fifty = random_polygons(501, 50, 4, 8, true);

  criterion("subcomplex-embedding", 120, [&](Outcome& o) {
    std::map<std::size_t, ComplexKP> convex_complex;
    std::size_t faces = 0, removed = 0;
    for (const Polygon& p : fifty) {
      const std::size_t n = p.size();
      if (!convex_complex.count(n)) convex_complex[n] = build_complex(fixtures::convex(static_cast<int>(n)));
      const Polygon c = fixtures::convex(static_cast<int>(n));
      const ComplexKP k = build_complex(p);
      for (const Face& f : k.faces) {
        ++faces;
        std::vector<std::pair<int, int>> img = label_image(p, f.diagonalization);
        o.require(convex_complex[n].find(by_labels(c, img)).has_value(), "face image missing");
      }
      const FacetRemoval fr = facet_removal(p);
      std::vector<Diagonalization> own;
      for (const Face& f : k.faces) own.push_back(f.diagonalization);
      o.require(fr.kept == own, "facet removal differs");
      o.require(fr.removed_connected, "removed part disconnected");
      removed += fr.removed_faces;
    }
    o.detail << fifty.size() << " polygons, " << faces << " faces mapped, " << removed << " faces removed";
  });

  criterion("dimension-formula", 120, [&](Outcome& o) {
    for (const Polygon& p : fifty) {
      // d(P) by brute force over every noncrossing subset.
      std::size_t d = p.size();
      for (const auto& s : oracles::noncrossing_subsets(p)) {
        if (oracles::convex_by_pieces(p, s)) d = std::min(d, s.size());
      }
      const int n = static_cast<int>(p.size());
      o.require(build_complex(p).dim == n - 3 - static_cast<int>(d), "polygon dim");
      o.require(minimal_convex_diagonalizations(p).d == d, "d(P) enumerator");
    }
    std::mt19937 rng(502);
    int regions = 0;
    for (int i = 0; i < 12; ++i) {
      const Polygon r = testing_support::random_one_hole_region(rng, 6 + i % 3);
      const ComplexKP k = build_complex(r);
      const std::size_t d = minimal_convex_diagonalizations(r).d;
      const int expect = static_cast<int>(r.size() + 3 * r.hole_count() - d) - 3;
      int from_pieces = -1;
      for (auto m : k.maximal_faces()) {
        int sum = 0;
        for (auto s : piece_sizes(r, k.faces[m].diagonalization)) sum += static_cast<int>(s) - 3;
        from_pieces = std::max(from_pieces, sum);
      }
      o.require(k.dim == expect && from_pieces == expect, "region dim");
      ++regions;
    }
    o.detail << fifty.size() << " polygons n<=8 and " << regions << " one-hole regions n<=8";
  });

  criterion("hexH-and-8gon-profiles", 60, [](Outcome& o) {
    const Polygon h = fixtures::hexH();
    const ComplexKP k = build_complex(h);
    const FlipGraph g = flip_graph(h);
    o.require(k.dim == 2, "hexH dim");
    o.require(g.connected(), "hexH connected");
    o.require(one_skeleton(k, g) == std::set<std::pair<std::size_t, std::size_t>>(g.arcs.begin(), g.arcs.end()),
              "hexH 1-skeleton");
    std::size_t squares = 0, edges = 0;
    const auto maximal = k.maximal_faces();
    for (auto m : maximal) {
      const auto sizes = piece_sizes(h, k.faces[m].diagonalization);
      if (sizes == std::vector<std::size_t>{4, 4}) ++squares;
      if (k.faces[m].dim == 1) ++edges;
    }
    // Where the two edges attach: opposite corners of the square.
    const auto all = enumerate_triangulations(h);
    std::vector<Diagonalization> corners;
    bool opposite = false;
    for (auto m : maximal) {
      if (piece_sizes(h, k.faces[m].diagonalization) != std::vector<std::size_t>{4, 4}) continue;
      for (const auto& t : all) {
        if (refines(t, k.faces[m].diagonalization)) corners.push_back(t);
      }
    }
    std::vector<Diagonalization> attach;
    for (auto m : maximal) {
      if (k.faces[m].dim != 1) continue;
      for (const auto& t : corners) {
        if (refines(t, k.faces[m].diagonalization)) attach.push_back(t);
      }
    }
    if (attach.size() == 2) {
      std::size_t shared = 0;
      for (auto x : attach[0].diagonals) shared += std::count(attach[1].diagonals.begin(), attach[1].diagonals.end(), x);
      opposite = shared == 1;  // adjacent corners would share two diagonals
    }
    o.detail << "hexH maximal faces: " << squares << " square(s) K4xK4, " << edges
             << " edge(s); edges at opposite square corners: " << (opposite ? "yes" : "no") << "; ";
    o.require(squares == maximal.size(), "literal clause 'every maximal face a square' (hexH has " +
                                             std::to_string(maximal.size()) + " maximal faces)");

    const Polygon p8 = squares_and_k6_octagon();
    const ComplexKP k8 = build_complex(p8);
    std::size_t sq8 = 0, k6 = 0;
    for (auto m : k8.maximal_faces()) {
      const auto sizes = piece_sizes(p8, k8.faces[m].diagonalization);
      if (sizes == std::vector<std::size_t>{3, 3, 4, 4} && k8.faces[m].dim == 2) ++sq8;
      if (sizes == std::vector<std::size_t>{3, 3, 6} && k8.faces[m].dim == 3) ++k6;
    }
    o.require(k8.maximal_faces().size() == 6 && sq8 == 4 && k6 == 2, "8-gon profile");
    o.require(flip_graph(p8).connected() && k8.euler_characteristic() == 1, "8-gon connected");
    o.detail << "8-gon maximal faces: " << k8.maximal_faces().size() << " = " << sq8 << " squares + " << k6 << " K6";
  });

  criterion("contractibility", 300, [](Outcome& o) {
    std::mt19937 rng(503);
    int polygons = 0, regions = 0;
    for (int i = 0; i < 100; ++i) {
      const Polygon p = testing_support::random_simple_polygon(rng, 4 + i % 6, true);
      o.require(homology_vanishes(theta_complex(p).homology), "theta homology");
      o.require(alternating_face_sum(build_complex(p)) == 1, "euler");
      ++polygons;
    }
    for (int i = 0; i < 10; ++i) {
      const Polygon r = testing_support::random_one_hole_region(rng, 6 + i % 2);
      o.require(homology_vanishes(theta_complex(r).homology), "region theta homology");
      o.require(alternating_face_sum(build_complex(r)) == 1, "region euler");
      ++regions;
    }
    o.detail << polygons << " nonconvex polygons n<=9, " << regions << " one-hole regions n<=7: reduced homology 0, chi 1";
  });

  criterion("product-factorization", 300, [](Outcome& o) {
    std::vector<Polygon> polygons;
    for (int n = 4; n <= 7; ++n) polygons.push_back(fixtures::convex(n));
    for (auto& p : random_polygons(504, 60, 4, 7, false)) polygons.push_back(std::move(p));
    std::size_t checked = 0;
    for (const Polygon& p : polygons) {
      const auto all = enumerate_triangulations(p);
      for (const Face& f : build_complex(p).faces) {
        Integer product = 1;
        for (const auto& piece : oracles::label_pieces(p.size(), f.diagonalization)) {
          product *= oracles::catalan(static_cast<int>(piece.size()) - 2);
        }
        const auto above = std::count_if(all.begin(), all.end(), [&](const auto& t) { return refines(t, f.diagonalization); });
        o.require(Integer(above) == product, "refinement count");
        o.require(face_factorization(p, f.diagonalization).matches, "face f-vector product");
        ++checked;
      }
    }
    o.detail << checked << " convex diagonalizations of " << polygons.size() << " polygons n<=7";
  });

  criterion("realization", 60, [](Outcome& o) {
    for (int n = 5; n <= 7; ++n) {
      const Polygon p = fixtures::convex(n);
      const Realization r = realize(p);
      const std::string tag = "n=" + std::to_string(n);
      o.require(Integer(r.points.size()) == oracles::catalan(n - 2), tag + " count");
      std::set<std::vector<Integer>> distinct;
      for (std::size_t i = 0; i < r.points.size(); ++i) {
        Integer sum = 0;
        for (const Integer& c : r.points[i].coords) sum += c;
        o.require(sum == pow3(static_cast<unsigned>(n - 3)), tag + " coordinate sum");
        distinct.insert(r.points[i].coords);
        const ExtremalityCertificate cert = extremality_certificate(p, r, i);
        auto value_at = [&](std::size_t j) {
          Integer v = 0;
          for (std::size_t x = 0; x < cert.functional.size(); ++x) v += cert.functional[x] * r.points[j].coords[x];
          return v;
        };
        for (std::size_t j = 0; j < r.points.size(); ++j) {
          if (j != i) o.require(value_at(i) < value_at(j), tag + " separation");
        }
      }
      o.require(distinct.size() == r.points.size(), tag + " distinct");
    }
    const Realization pent = realize(fixtures::convex(5));
    auto has = [&](std::vector<Integer> c) {
      return std::any_of(pent.points.begin(), pent.points.end(), [&](const auto& q) { return q.coords == c; });
    };
    o.require(has({1, 2, 6}) && has({6, 1, 2}), "pentagon points");
    o.detail << "n=5,6,7 sums 3^(n-3), Catalan(n-2) distinct certified points, (1,2,6) and (6,1,2) present";
  });

  criterion("secondary-polytope", 300, [](Outcome& o) {
    std::mt19937 rng(505);
    std::size_t certified = 0, full_rank = 0, below_triangulation_bound = 0, at_least_complex_dim = 0;
    for (int i = 0; i < 100; ++i) {
      const Polygon p = testing_support::random_simple_polygon(rng, 4 + i % 5);
      const SecondarySummary s = secondary_polytope_summary(p);
      const Rational area = signed_area(p.points());
      for (std::size_t t = 0; t < s.triangulations.size(); ++t) {
        Rational sum = 0;
        for (const Rational& x : s.area_vectors[t]) sum += x;
        o.require(sum == 3 * area, "sum of phi");
        const auto& w = s.certificates[t].w;
        bool strict = true;
        for (std::size_t u = 0; u < s.triangulations.size(); ++u) {
          if (u != t) strict = strict && inner(w, s.area_vectors[t]) < inner(w, area_vector(p, s.triangulations[u]));
        }
        o.require(strict, "height certificate");
        certified += strict;
      }
      const std::size_t rank = affine_rank_oracle(s.area_vectors);
      o.require(rank == s.affine_rank, "affine rank routes disagree");
      full_rank += rank == p.size() - 3;
      at_least_complex_dim += static_cast<int>(rank) >= build_complex(p).dim;
      below_triangulation_bound += s.triangulations.size() < p.size() - 2;
    }
    o.detail << certified << " area vectors certified; affine rank n-3 on " << full_rank
             << "/100 (" << below_triangulation_bound << " polygons have fewer than n-2 triangulations, so rank <= T-1 < n-3); "
             << "rank >= dim K_P on " << at_least_complex_dim << "/100; ";
    o.require(full_rank == 100, "literal clause 'affine rank n-3'");
  });

  criterion("deformation-bounds", 30, [](Outcome& o) {
    for (int n = 4; n <= 12; ++n) {
      const RankReport r = rank(fixtures::convex(n));
      o.require(Integer(r.rank) == oracles::binomial(n, 2), "convex rank");
      o.require(Integer(r.height) == oracles::binomial(n, 2) - 2 * n + 4, "height");
    }
    for (int n = 4; n <= 10; ++n) {
      const Polygon p = fixtures::unique_triangulation(n);
      o.require(rank(p).rank == std::size_t(2 * n - 3), "spiral rank");
      o.require(oracles::triangulation_count(p) == 1, "spiral triangulation unique");
    }
    o.require(rank(fixtures::convex(6)).height == 7, "height n=6");
    o.detail << "convex n=4..12 rank C(n,2); spirals n=4..10 rank 2n-3; height(6) = 7";
  });

  criterion("event-exactness", 60, [](Outcome& o) {
    const Trajectory tr = move_vertex(fixtures::hexH(), 2, pt(2, -1));
    o.require(tr.events.size() == 1, "event count");
    if (tr.events.size() == 1) {
      const DeformationEvent& e = tr.events[0];
      o.require(e.kind == EventKind::VisibilityGain && e.edge == std::pair{1, 3}, "gain {1,3}");
      o.require(e.t.exact() && e.t.lo == Rational(1, 2), "t = 1/2 exactly");
    }
    auto edges_at = [&](const Trajectory& m, const Rational& t) {
      return labeled_visibility(validate_polygon(m.at(t), {.allow_degenerate = true}), Execution::serial);
    };
    for (Rational t : {Rational(1, 7), Rational(1, 3), Rational(49, 100)}) {
      o.require(edges_at(tr, t) == tr.edges_start, "before the event");
    }
    for (Rational t : {Rational(51, 100), Rational(3, 4), Rational(1)}) {
      o.require(edges_at(tr, t) == tr.edges_end, "after the event");
    }
    // Random moves: two samples in every gap between events agree.
    std::mt19937 rng(506);
    std::uniform_int_distribution<int> coord(-5, 45);
    std::size_t moves = 0;
    for (int i = 0; i < 60 && moves < 30; ++i) {
      const Polygon p = testing_support::random_simple_polygon(rng, 5 + i % 4);
      const int label = 1 + i % static_cast<int>(p.size());
      Trajectory m;
      try {
        m = move_vertex(p, label, pt(coord(rng), coord(rng)));
      } catch (const Error&) {
        continue;
      }
      ++moves;
      std::vector<Rational> cuts{Rational(0)};
      for (const auto& e : m.events) {
        cuts.push_back(e.t.lo);
        cuts.push_back(e.t.hi);
      }
      cuts.push_back(m.truncated_at.value_or(Rational(1)));
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      for (std::size_t g = 0; g + 1 < cuts.size(); ++g) {
        const Rational lo = cuts[g];
        const Rational w = cuts[g + 1] - lo;
        if (w == 0) continue;
        o.require(edges_at(m, lo + w / 3) == edges_at(m, lo + 2 * w / 3), "gap constancy");
      }
    }
    o.detail << "hexH: one gain {1,3} at t=1/2; " << moves << " random moves constant between events";
  });

  criterion("star-monotonicity", 300, [](Outcome& o) {
    std::mt19937 rng(507);
    const Rational width = Rational(1) / Rational(Integer(1) << 60);
    std::size_t events = 0, intervals = 0;
    for (int i = 0; i < 100; ++i) {
      const Polygon p = testing_support::random_star_polygon(rng, 4 + i % 7);
      const StarDeformation s = star_deformation(p);
      for (const auto& e : s.events) {
        o.require(e.kind != EventKind::VisibilityLoss, "visibility loss");
        events += e.kind == EventKind::VisibilityGain;
      }
      const Polygon last = validate_polygon(s.targets);
      o.require(s.final_convex && is_convex(last), "final polygon convex");
      for (std::size_t j = 0; j + 1 < s.sample_edges.size(); ++j) {
        o.require(std::includes(s.sample_edges[j + 1].begin(), s.sample_edges[j + 1].end(),
                                s.sample_edges[j].begin(), s.sample_edges[j].end()),
                  "sampled graphs not nested");
      }
      for (const auto& t : s.critical) {
        if (!t.exact()) {
          ++intervals;
          o.require(t.hi - t.lo <= width, "isolation width");
        }
      }
    }
    o.detail << "100 star polygons n<=10: 0 losses, " << events << " gains, all end convex; " << intervals
             << " inexact roots within 2^-60";
  });

  std::printf("%d failing criteria\n", failures);
  return failures;
}
