#include <algorithm>
#include <set>

#include "doctest.h"
#include "polyassoc/homology.hpp"

using namespace polyassoc;

namespace {

SimplicialComplex closure(const std::vector<std::vector<std::uint32_t>>& facets) {
  std::set<std::vector<std::uint32_t>> all;
  for (auto f : facets) {
    std::sort(f.begin(), f.end());
    const std::size_t k = f.size();
    for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
      std::vector<std::uint32_t> s;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1U << i)) s.push_back(f[i]);
      all.insert(s);
    }
  }
  return SimplicialComplex{{all.begin(), all.end()}};
}

const HomologyGroup& degree(const std::vector<HomologyGroup>& g, int d) {
  return *std::find_if(g.begin(), g.end(), [&](const HomologyGroup& x) { return x.degree == d; });
}

}  // namespace

TEST_CASE("smith invariants of small matrices") {
  IntegerMatrix m(2, 2);
  m(0, 0) = 2;
  m(0, 1) = 4;
  m(1, 0) = 6;
  m(1, 1) = 8;
  // det = -8, gcd of entries 2: invariants 2, 4.
  CHECK(smith_invariants(m) == std::vector<Integer>{2, 4});

  IntegerMatrix z(3, 2);
  CHECK(smith_invariants(z).empty());

  SparseColumnMatrix s;
  s.rows = 2;
  s.columns = {{{0, Integer(2)}, {1, Integer(6)}}, {{0, Integer(4)}, {1, Integer(8)}}};
  CHECK(smith_invariants(s) == std::vector<Integer>{2, 4});
}

TEST_CASE("simplex and sphere") {
  auto simplex = closure({{0, 1, 2, 3}});
  CHECK(homology_vanishes(reduced_homology(simplex)));

  auto sphere = closure({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  auto h = reduced_homology(sphere);
  CHECK(degree(h, 2).rank == 1);
  CHECK(degree(h, 1).trivial());
  CHECK(degree(h, 0).trivial());

  auto two_points = closure({{0}, {1}});
  CHECK(degree(reduced_homology(two_points), 0).rank == 1);

  auto empty = SimplicialComplex{};
  CHECK(degree(reduced_homology(empty), -1).rank == 1);
}

TEST_CASE("projective plane has 2-torsion") {
  auto rp2 = closure({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                      {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}});
  auto h = reduced_homology(rp2);
  CHECK(degree(h, 1).rank == 0);
  CHECK(degree(h, 1).torsion == std::vector<Integer>{2});
  CHECK(degree(h, 2).trivial());
  CHECK(degree(h, 0).trivial());
}

TEST_CASE("circle and torus-free wedge") {
  auto circle = closure({{0, 1}, {1, 2}, {0, 2}});
  auto h = reduced_homology(circle);
  CHECK(degree(h, 1).rank == 1);
  auto wedge = closure({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  CHECK(degree(reduced_homology(wedge), 1).rank == 2);
}

TEST_CASE("faces must be closed") {
  SimplicialComplex bad{{{0, 1}}};
  CHECK_THROWS(reduced_homology(bad));
}
