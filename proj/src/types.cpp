#include "angle_extremes/types.hpp"

namespace angle_extremes {

std::string to_string(Geometry g) {
    return g == Geometry::euclidean ? "euclidean" : "hyperbolic";
}

Geometry geometry_from_string(const std::string& name) {
    if (name == "euclidean") return Geometry::euclidean;
    if (name == "hyperbolic") return Geometry::hyperbolic;
    throw SchemaError("unknown geometry \"" + name + "\" (expected euclidean|hyperbolic)");
}

}  // namespace angle_extremes
