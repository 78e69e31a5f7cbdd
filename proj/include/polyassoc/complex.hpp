#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyassoc/execution.hpp"
#include "polyassoc/homology.hpp"
#include "polyassoc/visibility.hpp"

namespace polyassoc {

inline constexpr std::size_t default_face_cap = 1'000'000;

struct EnumerationOptions {
  std::size_t cap = default_face_cap;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  Execution exec = Execution::parallel;
};

/// Canonical sorted set of diagonals (storage indices).
struct Diagonalization {
  std::vector<Diagonal> diagonals;

  std::size_t size() const { return diagonals.size(); }
  bool empty() const { return diagonals.empty(); }

  static Diagonalization of(std::vector<Diagonal> ds);

  friend auto operator<=>(const Diagonalization&, const Diagonalization&) = default;
};

using DiagonalId = std::uint32_t;
using IdSet = std::vector<DiagonalId>;

/// Diagonals of a region numbered in (a, b) order, with everything the
/// enumerators need precomputed: pairwise compatibility as bitsets, diagonals
/// incident to each vertex, and the spokes around each vertex sorted
/// counterclockwise inside the region's wedge.
class DiagonalCatalog {
 public:
  using Bits = std::vector<std::uint64_t>;

  explicit DiagonalCatalog(const Polygon& polygon, Execution exec = Execution::parallel);

  const Polygon& polygon() const { return polygon_; }
  std::size_t size() const { return diagonals_.size(); }
  std::size_t words() const { return words_; }
  const Diagonal& diagonal(DiagonalId id) const { return diagonals_[id]; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }

  /// Diagonals per triangulation: n + 3h - 3.
  std::size_t triangulation_size() const;

  std::optional<DiagonalId> id_of(std::size_t u, std::size_t v) const;
  /// Throws NotADiagonal.
  IdSet ids_of(const Diagonalization& d) const;
  Diagonalization diagonalization(const IdSet& ids) const;

  bool crosses(DiagonalId x, DiagonalId y) const { return !test(compatible_[x], y) && x != y; }
  const Bits& compatible(DiagonalId id) const { return compatible_[id]; }
  const Bits& incident(std::size_t v) const { return incident_[v]; }
  const std::vector<std::size_t>& reflex() const { return reflex_; }

  bool is_noncrossing(const IdSet& ids) const;

  /// Every corner of every piece turns left. `member` flags the chosen ids.
  /// Assumes the set is noncrossing.
  bool corners_convex(const std::vector<char>& member) const;
  bool is_convex(const IdSet& ids) const;

  /// Boundary cycles of the pieces cut out by a noncrossing set, each as
  /// storage indices in region-on-the-left order, rotated to start at its
  /// smallest index, sorted.
  std::vector<std::vector<std::size_t>> pieces(const IdSet& ids) const;

  static bool test(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1U; }
  static void set(Bits& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

 private:
  struct Spoke {
    std::size_t to;
    std::int64_t id;  // -1 for boundary edges
  };

  Polygon polygon_;
  std::vector<Diagonal> diagonals_;
  std::size_t words_ = 0;
  std::vector<std::int32_t> id_matrix_;
  std::vector<Bits> compatible_;
  std::vector<Bits> incident_;
  std::vector<std::size_t> reflex_;
  std::vector<std::vector<Spoke>> wedge_;
  std::vector<std::int32_t> slot_;  // position of spoke v->w in wedge_[v]
};

enum class Family {
  /// Every noncrossing set, empty set included.
  Noncrossing,
  /// Noncrossing sets whose pieces are all convex.
  Convex,
  /// Maximal noncrossing sets.
  Triangulations,
};

/// Depth-first enumeration in lexicographic order of sorted id lists. With
/// a base set only supersets of it are produced. Serial and parallel runs
/// return identical lists.
std::vector<IdSet> enumerate(const DiagonalCatalog& catalog, Family family, const IdSet& base = {},
                             const EnumerationOptions& options = {});

std::vector<Diagonalization> enumerate_triangulations(const Polygon& region,
                                                      const EnumerationOptions& options = {});

/// Throws NotADiagonal or CrossingDiagonals.
bool is_convex_diagonalization(const Polygon& region, const Diagonalization& d);

struct Face {
  Diagonalization diagonalization;
  int dim = 0;
  bool maximal = false;
};

/// Face poset of the complex: faces sorted by diagonal count, then
/// lexicographically. covers holds (a, b) when b is a plus one diagonal.
struct ComplexKP {
  std::size_t n = 0;
  std::size_t h = 0;
  int dim = 0;
  std::size_t dP = 0;
  std::vector<Face> faces;
  std::vector<std::pair<std::size_t, std::size_t>> covers;

  std::vector<std::size_t> f_vector() const;
  long euler_characteristic() const;
  std::optional<std::size_t> find(const Diagonalization& d) const;
  std::vector<std::size_t> maximal_faces() const;
};

ComplexKP build_complex(const Polygon& region, const EnumerationOptions& options = {});

struct MinimalDiagonalizations {
  std::vector<Diagonalization> sets;
  std::size_t d = 0;
};

MinimalDiagonalizations minimal_convex_diagonalizations(const Polygon& region,
                                                        const EnumerationOptions& options = {});

struct FaceFactorization {
  /// Label cycles of the pieces, as storage indices.
  std::vector<std::vector<std::size_t>> pieces;
  std::vector<std::size_t> edge_counts;
  /// f-vector of the face above D, counted by sub-enumeration.
  std::vector<std::size_t> face_f_vector;
  /// Componentwise (polynomial) product of the pieces' associahedron f-vectors.
  std::vector<std::size_t> product_f_vector;
  bool matches = false;
};

/// Throws NotConvexDiagonalization.
FaceFactorization face_factorization(const Polygon& region, const Diagonalization& d,
                                     const EnumerationOptions& options = {});

/// f-vector of the associahedron of a convex m-gon, by enumeration.
std::vector<std::size_t> associahedron_f_vector(int m);

struct FlipGraph {
  std::vector<Diagonalization> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  std::size_t components = 0;

  bool connected() const { return components == 1; }
};

FlipGraph flip_graph(const Polygon& region, const EnumerationOptions& options = {});

/// `graph F { 0 -- 1; ... }` over node indices.
std::string to_dot(const FlipGraph& graph);

struct ThetaComplex {
  std::vector<Diagonal> vertices;
  SimplicialComplex complex;  // simplices over indices into vertices
  std::size_t facet_size = 0;
  std::size_t facet_count = 0;
  bool pure = false;
  /// Convex input: the complex is a sphere, not a ball.
  bool convex_input = false;
  std::vector<HomologyGroup> homology;
};

ThetaComplex theta_complex(const Polygon& region, const EnumerationOptions& options = {});

/// Sorted label pairs: the image of a diagonal set in the convex polygon on
/// the same labels.
std::vector<std::pair<int, int>> label_image(const Polygon& polygon, const Diagonalization& d);

bool labels_interleave(std::pair<int, int> x, std::pair<int, int> y);

/// Faces of the convex n-gon's complex that survive removal of every facet
/// belonging to a diagonal the polygon lacks, mapped back to the polygon.
struct FacetRemoval {
  std::vector<Diagonalization> kept;
  std::vector<std::pair<int, int>> removed_diagonals;  // labels
  std::size_t removed_faces = 0;
  bool removed_connected = false;
};

/// Polygons without holes only (HolesUnsupported otherwise).
FacetRemoval facet_removal(const Polygon& polygon, const EnumerationOptions& options = {});

struct HoleSplit {
  Polygon polygon;
  /// Split storage index -> region storage index.
  std::vector<std::size_t> to_region;
  Diagonal bridge;
  int slit_exponent = 0;
  /// Convex diagonalizations of the split polygon map one-to-one onto those
  /// of the region containing the bridge.
  bool bijection_verified = false;
  std::size_t matched = 0;
};

/// Throws NotABridgeDiagonal when d does not join the outer boundary to a
/// hole, NotADiagonal when it is not a diagonal.
HoleSplit hole_split(const Polygon& region, Diagonal d, const EnumerationOptions& options = {});

}  // namespace polyassoc
