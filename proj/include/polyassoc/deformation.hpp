#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "polyassoc/execution.hpp"
#include "polyassoc/geometry.hpp"

namespace polyassoc {

/// Visibility edges as sorted label pairs.
using LabeledEdges = std::vector<std::pair<int, int>>;

LabeledEdges labeled_visibility(const Polygon& polygon, Execution exec = Execution::parallel);

struct RankReport {
  std::size_t n = 0;
  std::size_t rank = 0;      // edges of V(P), boundary included
  std::size_t min_rank = 0;  // 2n - 3
  std::size_t max_rank = 0;  // n(n - 1)/2
  std::size_t height = 0;    // binom(n, 2) - 2n + 4
};

RankReport rank(const Polygon& polygon);

/// Identical labeled visibility graphs. Throws MismatchedN.
bool v_equivalent(const Polygon& p1, const Polygon& p2);

enum class EventKind { VisibilityGain, VisibilityLoss, SimplicityViolation, GeneralPositionTouch };

/// "gain", "loss", "simplicity", "touch".
std::string_view to_string(EventKind kind);

/// Exact parameter when lo == hi, otherwise an isolating interval.
struct EventTime {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  friend bool operator==(const EventTime&, const EventTime&) = default;
};

struct DeformationEvent {
  EventTime t;
  EventKind kind = EventKind::GeneralPositionTouch;
  std::pair<int, int> edge{0, 0};  // labels; {0, 0} when no single edge applies
  std::array<int, 3> witness{};    // labels of a triple collinear at t
};

/// Straight-line motion of one vertex, all others fixed. Positions are kept
/// in label order.
struct Trajectory {
  std::vector<Point> start;
  int vertex = 0;  // label
  Point to;
  std::vector<DeformationEvent> events;
  std::optional<Rational> truncated_at;  // simplicity lost here
  LabeledEdges edges_start;
  LabeledEdges edges_end;

  std::vector<Point> at(const Rational& t) const;
  /// Positions at 1, or at the truncation parameter.
  std::vector<Point> finish() const;
};

/// Each orientation determinant through the moving vertex is affine in t, so
/// every event parameter is an exact rational. Parameters where the
/// visibility graph does not change are not reported. A change of more than
/// one edge at once is flagged GeneralPositionTouch alongside its per-edge
/// events. A collinear triple in the target itself is a touch at t = 1.
/// Throws TargetEqualsVertex, HolesUnsupported, DegenerateInput.
Trajectory move_vertex(const Polygon& polygon, int label, const Point& target,
                       Execution exec = Execution::parallel);

/// Applies moves one after another. Stops after a truncated move.
std::vector<Trajectory> run_moves(const Polygon& polygon, const std::vector<std::pair<int, Point>>& moves,
                                  Execution exec = Execution::parallel);

struct ChainReport {
  bool monotone = true;
  bool increasing = true;  // false only when every event is a loss
  std::size_t event_count = 0;
  std::size_t rank_start = 0;
  std::size_t rank_end = 0;
  /// (move, event) of the first loss when the chain mixes gains and losses.
  std::optional<std::pair<std::size_t, std::size_t>> first_loss;
  bool single_edge_steps = true;
};

/// Throws BrokenChain when a move was truncated or does not start where the
/// previous one ended.
ChainReport is_monotone_chain(const std::vector<Trajectory>& moves);

/// Sign changes of a quadratic c0 + c1 t + c2 t^2 on (0, 1], exact where a
/// root is rational and hit, otherwise isolated by bisection to `width_bits`.
std::vector<EventTime> isolate_roots(const std::array<Rational, 3>& coefficients, unsigned width_bits = 60);

/// How vertices travel along their rays toward the center. Linear moves each
/// vertex at constant speed; InverseRadius interpolates 1/d(p_i(t), x)
/// linearly, which makes every visibility condition affine in t, so no pair
/// visible at t = 0 is ever lost. Linear can lose visibility (a convex
/// heptagon on y = x^2 does) and is kept for comparison.
enum class StarPath { InverseRadius, Linear };

/// Every vertex slides along its ray toward a kernel point x, ending at
/// x + eps * u_i with u_i a rational near-unit vector along p_i - x. Events
/// are the visibility changes between exact sample times placed in the gaps
/// between isolated roots of all triple determinants.
struct StarDeformation {
  StarPath path = StarPath::InverseRadius;
  Point center;
  Rational epsilon;
  bool degenerate_kernel = false;  // kernel is a segment or point
  std::vector<Point> start;
  std::vector<Point> targets;
  std::vector<EventTime> critical;  // merged root clusters
  std::vector<Rational> samples;    // 0, one time per gap, 1
  std::vector<LabeledEdges> sample_edges;
  std::vector<DeformationEvent> events;
  bool monotone = false;  // no loss and every sample simple
  bool final_convex = false;

  std::vector<Point> at(const Rational& t) const;
};

/// Throws NotStar when the kernel is empty or `center` is not strictly
/// inside every edge's half-plane.
StarDeformation star_deformation(const Polygon& polygon, std::optional<Point> center = std::nullopt,
                                 StarPath path = StarPath::InverseRadius, Execution exec = Execution::parallel);

}  // namespace polyassoc
