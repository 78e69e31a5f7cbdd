#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "polyassoc/complex.hpp"

namespace polyassoc {

/// Storage indices of the vertices labeled n-1 and n.
Diagonal default_root_edge(const Polygon& polygon);

/// Triangles of a triangulation rooted at the triangle on the root edge.
/// Vectors are indexed by triangle; triangles are counterclockwise storage
/// triples.
struct DualTree {
  Diagonal root_edge;
  std::vector<std::array<std::size_t, 3>> triangles;
  std::size_t root = 0;
  std::vector<std::ptrdiff_t> parent;  // -1 at the root
  std::vector<std::vector<std::size_t>> children;
  std::vector<Diagonal> parent_edge;   // shared diagonal with the parent
  std::vector<std::size_t> depth;
  std::vector<std::size_t> subtree_size;  // |r(triangle)|
  std::vector<std::size_t> bfs_order;
};

/// Throws NotATriangulation, NotABoundaryEdge, HolesUnsupported.
DualTree dual_tree(const Polygon& polygon, const Diagonalization& triangulation, Diagonal root_edge);

struct ThetaAssignment {
  std::vector<Integer> theta;      // per triangle
  std::vector<Integer> theta_hat;  // per storage vertex
};

ThetaAssignment theta_assignment(const DualTree& tree, std::size_t vertex_count);

struct RealizationPoint {
  Diagonalization triangulation;
  std::vector<Integer> coords;
};

struct Realization {
  Diagonal root_edge;
  /// Storage indices of the coordinate vertices, in label order.
  std::vector<std::size_t> coordinate_vertices;
  std::vector<RealizationPoint> points;
};

Realization realize(const Polygon& polygon, std::optional<Diagonal> root_edge = std::nullopt,
                    const EnumerationOptions& options = {});

/// Linear functional minimized at exactly one realization point: the sum,
/// over the diagonals of its triangulation, of the indicator of the vertices
/// beyond the diagonal as seen from the root edge.
struct ExtremalityCertificate {
  std::vector<Integer> functional;
  Integer value;
  Integer runner_up;  // smallest value at any other point
};

/// Throws CertificateNotFound if the functional fails to separate.
ExtremalityCertificate extremality_certificate(const Polygon& polygon, const Realization& realization,
                                               std::size_t index);

/// Indicator, over the coordinate vertices, of the side of d away from the
/// root edge.
std::vector<Integer> far_side_indicator(const Polygon& polygon, const Realization& realization, Diagonal d);

/// phi by label: entry i - 1 is the area of the triangles at vertex i.
std::vector<Rational> area_vector(const Polygon& polygon, const Diagonalization& triangulation);

Rational inner(const std::vector<Rational>& x, const std::vector<Rational>& y);

struct HeightCertificate {
  Diagonalization triangulation;
  std::vector<Rational> w;  // by label
  Integer base;             // growth factor that passed both checks
  Rational value;           // <w, phi(T)>
  Rational runner_up;       // min over the other triangulations
};

/// Builds w from a breadth-first numbering of the dual tree with heights
/// base^k, doubling the base until the lifted surface is locally convex across
/// every diagonal and <w, phi(T)> is strictly below every other triangulation
/// in `all`. Throws CertificateNotFound after 64 doublings.
HeightCertificate height_certificate(const Polygon& polygon, const Diagonalization& triangulation,
                                     const std::vector<Diagonalization>& all,
                                     std::optional<Diagonal> root_edge = std::nullopt);

HeightCertificate height_certificate(const Polygon& polygon, const Diagonalization& triangulation,
                                     std::optional<Diagonal> root_edge = std::nullopt,
                                     const EnumerationOptions& options = {});

struct FaceCertificate {
  Diagonalization diagonalization;
  std::vector<Rational> w;  // by label, all positive
  Rational value;           // shared by the face's triangulations
  Rational runner_up;
};

/// The triangulations must be exactly the refinements of one convex
/// diagonalization (NotAFace otherwise). w is affine on every piece and
/// folds upward across each diagonal.
FaceCertificate face_support_certificate(const Polygon& polygon, const std::vector<Diagonalization>& face,
                                         const EnumerationOptions& options = {});

struct SecondarySummary {
  Rational area;
  std::vector<Diagonalization> triangulations;
  std::vector<std::vector<Rational>> area_vectors;
  std::vector<HeightCertificate> certificates;
  bool sums_match = false;  // every sum of phi equals 3 * area
  bool distinct = false;
  std::size_t affine_rank = 0;
};

SecondarySummary secondary_polytope_summary(const Polygon& polygon, const EnumerationOptions& options = {});

/// Exact rank of a set of rational vectors.
std::size_t rank_of(std::vector<std::vector<Rational>> rows);

namespace detail {
std::vector<HeightCertificate> certificates_serial(const Polygon& polygon, const std::vector<Diagonalization>& all);
std::vector<HeightCertificate> certificates_parallel(const Polygon& polygon, const std::vector<Diagonalization>& all);
}  // namespace detail

}  // namespace polyassoc
