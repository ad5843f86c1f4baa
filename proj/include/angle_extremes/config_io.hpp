#pragma once

#include <string>

#include "angle_extremes/types.hpp"

namespace angle_extremes::io {

// Parses a configuration file:
//   {"geometry": "euclidean"|"hyperbolic", "dim": d, "points": [[x, y, ...], ...]}
// "dim" is optional for hyperbolic (must be 2 when present). Structural
// problems raise SchemaError with a line/field diagnostic; metric-domain
// problems (boundary, coincident points) raise the geometry errors.
Configuration load_config(const std::string& path);
Configuration parse_config(const std::string& text);

// Serializes with 17 significant digits so a write/read round-trip is
// bit-exact.
std::string config_to_json(const Configuration& config);
void save_config(const Configuration& config, const std::string& path);

// Domain checks shared by the loaders: pairwise separation and, for
// hyperbolic points, the boundary margin.
void validate_domain(const Configuration& config);

std::string format_double(double v);  // shortest 17-significant-digit form

}  // namespace angle_extremes::io
