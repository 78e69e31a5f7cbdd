#pragma once

#include <optional>
#include <vector>

#include "polyassoc/rational.hpp"

namespace oracles {

using polyassoc::Rational;

// Dense two-phase simplex with Bland's rule over exact rationals.
// Maximizes c.x subject to A x = b, x >= 0. Returns nullopt when infeasible.
// Callers only pose bounded problems.
inline std::optional<Rational> lp_maximize(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                                           const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      for (auto& x : a[i]) x = -x;
      b[i] = -b[i];
    }
  }
  // Tableau columns: n originals, m artificials, then the right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = b[i];
    basis[i] = n + i;
  }

  auto pivot = [&](std::size_t r, std::size_t col) {
    const Rational p = t[r][col];
    for (auto& x : t[r]) x /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || t[i][col] == 0) continue;
      const Rational f = t[i][col];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = col;
  };

  // Maximizes obj over the current tableau, only entering columns < limit.
  auto run = [&](const std::vector<Rational>& obj, std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit && enter == limit; ++j) {
        Rational reduced = obj[j];
        for (std::size_t i = 0; i < m; ++i) reduced -= obj[basis[i]] * t[i][j];
        if (reduced > 0) enter = j;
      }
      if (enter == limit) return;
      std::size_t leave = m;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        const Rational ratio = t[i][width - 1] / t[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return;  // unbounded; not posed by callers
      pivot(leave, enter);
    }
  };

  std::vector<Rational> phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
  run(phase1, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n && t[i][width - 1] != 0) return std::nullopt;
  }
  // Drive zero-valued artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (t[i][j] != 0) {
        pivot(i, j);
        break;
      }
    }
  }
  std::vector<Rational> phase2(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  run(phase2, n);
  Rational value = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) value += c[basis[i]] * t[i][width - 1];
  }
  return value;
}

}  // namespace oracles
