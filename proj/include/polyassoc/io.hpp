#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "polyassoc/complex.hpp"
#include "polyassoc/deformation.hpp"
#include "polyassoc/error.hpp"
#include "polyassoc/geometry.hpp"
#include "polyassoc/realization.hpp"
#include "polyassoc/visibility.hpp"

namespace polyassoc::io {

using Json = nlohmann::json;

/// Accepts a JSON integer or a string holding an integer, decimal or "p/q".
/// Floating-point JSON numbers are refused so nothing is rounded silently.
Rational parse_number(const Json& value);
Point parse_point(const Json& value);

/// `{"vertices": [[x, y], ...], "holes": [[[x, y], ...], ...]}`.
/// Throws InvalidInput for a malformed document and the geometry errors for
/// an invalid polygon.
Polygon parse_polygon(const Json& document, ValidationOptions options = {});

/// Integers as numbers when they fit in 53 bits, otherwise as strings.
Json integer(const Integer& value);
Json rational(const Rational& value);
/// Coordinates: numbers when integral and small, otherwise "p/q".
Json coordinate(const Rational& value);
Json point(const Point& p);

/// The input echo: loops in label order, holes only when present.
Json polygon(const Polygon& polygon);
Json polygon(const std::vector<Point>& vertices);

Json labels(const Polygon& polygon, Diagonal d);
Json diagonals(const Polygon& polygon, const Diagonalization& d);

Json visibility(const Polygon& polygon, const VisibilityGraph& graph);
Json complex(const Polygon& polygon, const ComplexKP& complex);
Json flip_graph(const Polygon& polygon, const FlipGraph& graph);
Json triangulations(const Polygon& polygon, const std::vector<Diagonalization>& all);
Json theta(const Polygon& polygon, const ThetaComplex& theta);
Json realization(const Polygon& polygon, const Realization& realization);
Json secondary(const Polygon& polygon, const SecondarySummary& summary);
Json rank(const RankReport& report);

Json event(const DeformationEvent& e);
/// Event log of a chain of moves.
Json event_log(const std::vector<Trajectory>& moves);
/// Star report plus the polygon at every sample time.
Json star_report(const StarDeformation& star);

Json error(const Error& e);

}  // namespace polyassoc::io
