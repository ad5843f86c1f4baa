#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace angle_extremes {

enum class Geometry { euclidean, hyperbolic };

std::string to_string(Geometry g);
Geometry geometry_from_string(const std::string& name);

// A labelled point set. For geometry == hyperbolic, dim must be 2 and every
// point must satisfy |u| < 1 - kBoundaryTol (Poincare disk coordinates).
struct Configuration {
    Geometry geometry{Geometry::euclidean};
    int dim{2};
    std::vector<std::vector<double>> points;

    int size() const { return static_cast<int>(points.size()); }
};

// Minimum distance below which two points count as coincident.
inline constexpr double kSeparationTol = 1e-9;
// Poincare coordinates must stay below 1 - kBoundaryTol in norm.
inline constexpr double kBoundaryTol = 1e-7;
// Slack for non-strict theorem bounds (absorbs rounding in pi/n itself).
inline constexpr double kBoundSlack = 1e-12;

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two points of a triple closer than kSeparationTol.
class DegenerateVertexError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

// Strict convex hull has fewer than 3 vertices.
class AllCollinearError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

// Poincare coordinate with |u| >= 1 - kBoundaryTol.
class BoundaryViolationError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

// Triangle sides that violate the triangle inequality past tolerance.
class DegenerateTriangleError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

// Vertex set fails the regular-n-gon shape check.
class NotRegularError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

// Malformed configuration file (JSON syntax, missing/ill-typed fields).
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised by verify_theorem when a sampled configuration beats the bound.
class TheoremViolation : public std::runtime_error {
public:
    TheoremViolation(const std::string& what, Configuration config, long long trial)
        : std::runtime_error(what), config(std::move(config)), trial(trial) {}

    Configuration config;
    long long trial;
};

}  // namespace angle_extremes
