#include "polyassoc/homology.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>

#include "polyassoc/error.hpp"

namespace polyassoc {

namespace {

Integer abs_value(const Integer& v) { return v.sign() < 0 ? Integer(-v) : v; }

// Floor-free Euclidean quotient good enough for the reduction: any q works as
// long as the remainder shrinks in absolute value.
Integer nearest_quotient(const Integer& a, const Integer& b) { return a / b; }

}  // namespace

std::vector<Integer> smith_invariants(IntegerMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pr = t, pc = t;
    Integer best;
    for (std::size_t r = t; r < rows; ++r) {
      for (std::size_t c = t; c < cols; ++c) {
        if (m(r, c).sign() == 0) continue;
        Integer a = abs_value(m(r, c));
        if (!found || a < best) {
          best = a;
          pr = r;
          pc = c;
          found = true;
        }
      }
    }
    if (!found) break;
    if (pr != t) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(pr, c), m(t, c));
    }
    if (pc != t) {
      for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, pc), m(r, t));
    }

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t).sign() == 0) continue;
        Integer q = nearest_quotient(m(r, t), m(t, t));
        for (std::size_t c = t; c < cols; ++c) m(r, c) -= q * m(t, c);
        if (m(r, t).sign() != 0) {
          // Remainder smaller than the pivot: swap it in and go again.
          for (std::size_t c = 0; c < cols; ++c) std::swap(m(r, c), m(t, c));
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c).sign() == 0) continue;
        Integer q = nearest_quotient(m(t, c), m(t, t));
        for (std::size_t r = t; r < rows; ++r) m(r, c) -= q * m(r, t);
        if (m(t, c).sign() != 0) {
          for (std::size_t r = 0; r < rows; ++r) std::swap(m(r, c), m(r, t));
          clean = false;
        }
      }
      if (clean) {
        // Divisibility: the pivot must divide the whole trailing block.
        for (std::size_t r = t + 1; r < rows && clean; ++r) {
          for (std::size_t c = t + 1; c < cols; ++c) {
            if (m(r, c).sign() != 0 && Integer(m(r, c) % m(t, t)).sign() != 0) {
              for (std::size_t k = t; k < cols; ++k) m(t, k) += m(r, k);
              clean = false;
              break;
            }
          }
        }
      }
    }
    diag.push_back(abs_value(m(t, t)));
    ++t;
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

std::vector<Integer> smith_invariants(const SparseColumnMatrix& input) {
  // Row-oriented copy plus column occupancy for fast pivot elimination.
  const std::size_t ncols = input.columns.size();
  std::vector<std::map<std::uint32_t, Integer>> rows(input.rows);
  for (std::size_t c = 0; c < ncols; ++c) {
    for (const auto& [r, v] : input.columns[c]) {
      if (v.sign() == 0) continue;
      rows[r][static_cast<std::uint32_t>(c)] += v;
    }
  }
  std::vector<std::map<std::uint32_t, bool>> cols(ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (auto it = rows[r].begin(); it != rows[r].end();) {
      if (it->second.sign() == 0) {
        it = rows[r].erase(it);
      } else {
        cols[it->first][static_cast<std::uint32_t>(r)] = true;
        ++it;
      }
    }
  }

  std::size_t units = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (cols[c].empty()) continue;
      // Unit entry in this column with the sparsest row.
      std::uint32_t pivot_row = 0;
      std::size_t best = SIZE_MAX;
      for (const auto& [r, _] : cols[c]) {
        const Integer& v = rows[r].at(static_cast<std::uint32_t>(c));
        if ((v == 1 || v == -1) && rows[r].size() < best) {
          best = rows[r].size();
          pivot_row = r;
        }
      }
      if (best == SIZE_MAX) continue;
      progress = true;
      ++units;
      const auto pivot = rows[pivot_row];  // copy: rows[pivot_row] is erased below
      const Integer p = pivot.at(static_cast<std::uint32_t>(c));
      std::vector<std::uint32_t> others;
      for (const auto& [r, _] : cols[c]) {
        if (r != pivot_row) others.push_back(r);
      }
      for (std::uint32_t r : others) {
        const Integer f = rows[r].at(static_cast<std::uint32_t>(c)) * p;  // p^-1 == p
        for (const auto& [k, v] : pivot) {
          Integer& slot = rows[r][k];
          slot -= f * v;
          if (slot.sign() == 0) {
            rows[r].erase(k);
            cols[k].erase(r);
          } else {
            cols[k][r] = true;
          }
        }
      }
      for (const auto& [k, _] : pivot) cols[k].erase(pivot_row);
      rows[pivot_row].clear();
    }
  }

  // Dense remainder.
  std::vector<std::uint32_t> live_rows;
  std::vector<std::uint32_t> live_cols;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].empty()) live_rows.push_back(static_cast<std::uint32_t>(r));
  }
  for (std::size_t c = 0; c < ncols; ++c) {
    if (!cols[c].empty()) live_cols.push_back(static_cast<std::uint32_t>(c));
  }
  std::vector<Integer> out(units, Integer(1));
  if (!live_rows.empty()) {
    std::unordered_map<std::uint32_t, std::size_t> col_pos;
    for (std::size_t i = 0; i < live_cols.size(); ++i) col_pos[live_cols[i]] = i;
    IntegerMatrix dense(live_rows.size(), live_cols.size());
    for (std::size_t i = 0; i < live_rows.size(); ++i) {
      for (const auto& [k, v] : rows[live_rows[i]]) dense(i, col_pos.at(k)) = v;
    }
    auto rest = smith_invariants(std::move(dense));
    out.insert(out.end(), rest.begin(), rest.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& complex) {
  // Group simplices by dimension, index them, and include the empty simplex
  // as the single generator in degree -1.
  int top = -1;
  for (const auto& s : complex.simplices) {
    if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty simplex listed explicitly");
    top = std::max(top, static_cast<int>(s.size()) - 1);
  }
  const std::size_t levels = static_cast<std::size_t>(top + 2);  // degrees -1..top
  std::vector<std::vector<const std::vector<std::uint32_t>*>> by_dim(levels);
  for (const auto& s : complex.simplices) by_dim[s.size()].push_back(&s);
  std::vector<std::map<std::vector<std::uint32_t>, std::uint32_t>> index(levels);
  static const std::vector<std::uint32_t> empty_simplex;
  by_dim[0].push_back(&empty_simplex);
  for (std::size_t k = 0; k < levels; ++k) {
    std::sort(by_dim[k].begin(), by_dim[k].end(),
              [](const auto* a, const auto* b) { return *a < *b; });
    for (std::size_t i = 0; i < by_dim[k].size(); ++i) {
      auto [it, inserted] = index[k].emplace(*by_dim[k][i], static_cast<std::uint32_t>(i));
      if (!inserted) throw Error(ErrorCode::InvalidInput, "duplicate simplex");
    }
  }

  // boundary[k] maps level k (k-1 dimensional simplices) to level k-1.
  std::vector<std::size_t> rank(levels + 1, 0);
  std::vector<std::vector<Integer>> invariants(levels + 1);
  for (std::size_t k = 1; k < levels; ++k) {
    SparseColumnMatrix m;
    m.rows = by_dim[k - 1].size();
    m.columns.resize(by_dim[k].size());
    for (std::size_t c = 0; c < by_dim[k].size(); ++c) {
      const auto& s = *by_dim[k][c];
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::vector<std::uint32_t> face;
        face.reserve(s.size() - 1);
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (j != i) face.push_back(s[j]);
        }
        auto it = index[k - 1].find(face);
        if (it == index[k - 1].end()) {
          throw Error(ErrorCode::InvalidInput, "simplicial complex is not closed under faces");
        }
        m.columns[c].emplace_back(it->second, Integer((i % 2 == 0) ? 1 : -1));
      }
    }
    invariants[k] = smith_invariants(m);
    rank[k] = invariants[k].size();
  }

  std::vector<HomologyGroup> out;
  for (std::size_t k = 0; k < levels; ++k) {
    HomologyGroup g;
    g.degree = static_cast<int>(k) - 1;
    const std::size_t cycles = by_dim[k].size() - rank[k];
    g.rank = cycles - rank[k + 1];
    for (const Integer& d : invariants[k + 1]) {
      if (d > 1) g.torsion.push_back(d);
    }
    out.push_back(std::move(g));
  }
  return out;
}

bool homology_vanishes(const std::vector<HomologyGroup>& groups) {
  return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return g.trivial(); });
}

}  // namespace polyassoc
