#pragma once

#include <span>
#include <vector>

#include "angle_extremes/types.hpp"

namespace angle_extremes::euclidean {

// Strict convex hull: extremal_indices counterclockwise, collinear boundary
// points demoted to interior_indices.
struct ConvexHull {
    std::vector<int> extremal_indices;
    std::vector<int> interior_indices;
};

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
double distance(std::span<const double> a, std::span<const double> b);

// Interior angle at q of the triple (p, q, r), in [0, pi]. Exactly symmetric
// in p and r. Collinear triples give 0 or pi; coincident endpoints throw.
double angle_at(std::span<const double> p, std::span<const double> q, std::span<const double> r);

ConvexHull convex_hull(const Configuration& config);

// Indices of the strict hull of raw planar coordinates, counterclockwise,
// starting from the lexicographically smallest point. Throws AllCollinear
// when fewer than 3 survive.
std::vector<int> strict_hull_indices(const std::vector<std::vector<double>>& pts);

Configuration regular_ngon(int n, double circumradius);

// d+1 pairwise-equidistant points in R^d, centered at the origin.
Configuration regular_simplex(int d);

}  // namespace angle_extremes::euclidean
