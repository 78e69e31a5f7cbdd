#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "polyassoc/complex.hpp"
#include "polyassoc/geometry.hpp"
#include "polyassoc/visibility.hpp"

namespace oracles {

using polyassoc::Integer;

/// Catalan numbers by the convolution recurrence C_{k+1} = sum C_i C_{k-i}.
inline Integer catalan(int k) {
  std::vector<Integer> c{1};
  for (int m = 1; m <= k; ++m) {
    Integer s = 0;
    for (int i = 0; i < m; ++i) s += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
    c.push_back(s);
  }
  return c[static_cast<std::size_t>(k)];
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Faces of the associahedron of a convex m-gon with j diagonals.
inline Integer kirkman_cayley(int m, int j) {
  return binomial(m - 3, j) * binomial(m + j - 1, j) / (j + 1);
}

/// Triangulations of a simple polygon by interval dynamic programming over
/// storage order: T(i, j) sums over apexes k with ik and kj edges or diagonals.
inline Integer triangulation_count(const polyassoc::Polygon& p) {
  const std::size_t n = p.size();
  auto ok = [&](std::size_t a, std::size_t b) { return p.adjacent(a, b) || polyassoc::is_diagonal(p, a, b); };
  std::vector<std::vector<Integer>> t(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i + 1 < n; ++i) t[i][i + 1] = 1;
  for (std::size_t len = 2; len < n; ++len) {
    for (std::size_t i = 0; i + len < n; ++i) {
      const std::size_t j = i + len;
      if (!ok(i, j)) continue;
      for (std::size_t k = i + 1; k < j; ++k) {
        if (ok(i, k) && ok(k, j)) t[i][j] += t[i][k] * t[k][j];
      }
    }
  }
  return t[0][n - 1];
}

/// Pieces of a noncrossing diagonal set of a polygon without holes, by
/// repeatedly cutting the storage-order cycle along each diagonal.
inline std::vector<std::vector<std::size_t>> label_pieces(std::size_t n, const polyassoc::Diagonalization& d) {
  std::vector<std::vector<std::size_t>> pieces(1);
  for (std::size_t v = 0; v < n; ++v) pieces[0].push_back(v);
  for (const auto& e : d.diagonals) {
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      auto& c = pieces[k];
      auto ia = std::find(c.begin(), c.end(), e.a);
      auto ib = std::find(c.begin(), c.end(), e.b);
      if (ia == c.end() || ib == c.end()) continue;
      // Noncrossing: the two endpoints are on exactly one common piece
      // whose cycle they split. Pieces sharing both endpoints as an edge
      // are ruled out because each diagonal is cut only once.
      const std::size_t x = static_cast<std::size_t>(ia - c.begin());
      const std::size_t y = static_cast<std::size_t>(ib - c.begin());
      const std::size_t lo = std::min(x, y), hi = std::max(x, y);
      if (hi - lo == 1 || (lo == 0 && hi == c.size() - 1)) continue;
      std::vector<std::size_t> inner(c.begin() + static_cast<long>(lo), c.begin() + static_cast<long>(hi) + 1);
      std::vector<std::size_t> outer(c.begin(), c.begin() + static_cast<long>(lo) + 1);
      outer.insert(outer.end(), c.begin() + static_cast<long>(hi), c.end());
      c = std::move(inner);
      pieces.push_back(std::move(outer));
      break;
    }
  }
  for (auto& c : pieces) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  std::sort(pieces.begin(), pieces.end());
  return pieces;
}

/// A piece is convex iff every vertex of it lies left of (or on) every
/// directed piece edge line, with strict turns at the corners.
inline bool convex_by_pieces(const polyassoc::Polygon& p, const polyassoc::Diagonalization& d) {
  for (const auto& c : label_pieces(p.size(), d)) {
    const std::size_t k = c.size();
    for (std::size_t i = 0; i < k; ++i) {
      const auto& a = p.point(c[i]);
      const auto& b = p.point(c[(i + 1) % k]);
      for (std::size_t j = 0; j < k; ++j) {
        if (j == i || j == (i + 1) % k) continue;
        if (polyassoc::orient(a, b, p.point(c[j])) <= 0) return false;
      }
    }
  }
  return true;
}

/// All noncrossing diagonal subsets, by brute force over subsets of a
/// small diagonal list.
inline std::vector<polyassoc::Diagonalization> noncrossing_subsets(const polyassoc::Polygon& p) {
  const auto ds = polyassoc::all_diagonals(p, polyassoc::Execution::serial);
  std::vector<polyassoc::Diagonalization> out;
  std::vector<polyassoc::Diagonal> cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == ds.size()) {
      out.push_back(polyassoc::Diagonalization{cur});
      return;
    }
    self(self, i + 1);
    for (const auto& e : cur)
      if (polyassoc::segments_cross(p, e, ds[i])) return;
    cur.push_back(ds[i]);
    self(self, i + 1);
    cur.pop_back();
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracles
