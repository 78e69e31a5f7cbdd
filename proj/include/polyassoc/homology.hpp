#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "polyassoc/rational.hpp"

namespace polyassoc {

/// Dense integer matrix, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Nonzero invariant factors d_1 | d_2 | ... (all positive).
std::vector<Integer> smith_invariants(IntegerMatrix m);

/// Sparse integer matrix given as column lists of (row, value).
struct SparseColumnMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::uint32_t, Integer>>> columns;
};

/// Invariant factors of a sparse matrix: unit pivots are eliminated
/// sparsely, whatever remains goes through the dense Smith form.
std::vector<Integer> smith_invariants(const SparseColumnMatrix& m);

struct HomologyGroup {
  int degree = 0;
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1

  bool trivial() const { return rank == 0 && torsion.empty(); }
};

/// Simplices as sorted vertex lists. The set must be closed under taking
/// nonempty faces; the empty simplex is implied.
struct SimplicialComplex {
  std::vector<std::vector<std::uint32_t>> simplices;
};

/// Reduced integral homology in degrees -1 .. dim.
std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& complex);

bool homology_vanishes(const std::vector<HomologyGroup>& groups);

}  // namespace polyassoc
