#include "angle_extremes/config_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "angle_extremes/euclidean.hpp"
#include "angle_extremes/hyperbolic.hpp"

namespace angle_extremes::io {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& field, const std::string& why) {
    throw SchemaError("field \"" + field + "\": " + why);
}

int line_of_byte(const std::string& text, std::size_t byte) {
    std::size_t stop = std::min(byte, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(stop), '\n'));
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Configuration parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("line " + std::to_string(line_of_byte(text, e.byte)) +
                          ": " + e.what());
    }
    if (!doc.is_object()) throw SchemaError("top level: expected a JSON object");

    if (!doc.contains("geometry")) schema_fail("geometry", "missing");
    if (!doc["geometry"].is_string()) schema_fail("geometry", "expected a string");
    Configuration cfg;
    cfg.geometry = geometry_from_string(doc["geometry"].get<std::string>());

    if (!doc.contains("points")) schema_fail("points", "missing");
    if (!doc["points"].is_array()) schema_fail("points", "expected an array of arrays");
    const json& pts = doc["points"];
    if (pts.size() < 3) schema_fail("points", "need at least 3 points");

    int dim = -1;
    if (doc.contains("dim")) {
        if (!doc["dim"].is_number_integer()) schema_fail("dim", "expected an integer");
        dim = doc["dim"].get<int>();
        if (dim < 2) schema_fail("dim", "need dim >= 2");
    }
    if (cfg.geometry == Geometry::hyperbolic) {
        if (dim == -1) dim = 2;
        if (dim != 2) schema_fail("dim", "hyperbolic configurations are planar (dim 2)");
    }

    for (std::size_t i = 0; i < pts.size(); ++i) {
        const json& row = pts[i];
        std::string where = "points[" + std::to_string(i) + "]";
        if (!row.is_array()) schema_fail(where, "expected a coordinate array");
        if (dim == -1) {
            dim = static_cast<int>(row.size());
            if (dim < 2) schema_fail(where, "need at least 2 coordinates");
        }
        if (static_cast<int>(row.size()) != dim) {
            schema_fail(where, "expected " + std::to_string(dim) + " coordinates, got " +
                                   std::to_string(row.size()));
        }
        std::vector<double> p;
        p.reserve(row.size());
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (!row[c].is_number()) {
                schema_fail(where + "[" + std::to_string(c) + "]", "expected a number");
            }
            double v = row[c].get<double>();
            if (!std::isfinite(v)) {
                schema_fail(where + "[" + std::to_string(c) + "]", "coordinate must be finite");
            }
            p.push_back(v);
        }
        cfg.points.push_back(std::move(p));
    }
    cfg.dim = dim;
    validate_domain(cfg);
    return cfg;
}

Configuration load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void validate_domain(const Configuration& config) {
    const int n = config.size();
    if (config.geometry == Geometry::hyperbolic) {
        for (int i = 0; i < n; ++i) {
            const auto& u = config.points[static_cast<std::size_t>(i)];
            if (std::hypot(u[0], u[1]) >= 1.0 - kBoundaryTol) {
                throw BoundaryViolationError("points[" + std::to_string(i) +
                                             "] is outside the open unit disk margin");
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double sep = config.geometry == Geometry::hyperbolic
                             ? hyperbolic::hyp_distance(config.points[static_cast<std::size_t>(i)],
                                                        config.points[static_cast<std::size_t>(j)])
                             : euclidean::distance(config.points[static_cast<std::size_t>(i)],
                                                   config.points[static_cast<std::size_t>(j)]);
            if (sep < kSeparationTol) {
                throw DegenerateVertexError("points " + std::to_string(i) + " and " +
                                            std::to_string(j) + " coincide within tolerance");
            }
        }
    }
}

std::string config_to_json(const Configuration& config) {
    std::ostringstream out;
    out << "{\n  \"geometry\": \"" << to_string(config.geometry) << "\",\n";
    out << "  \"dim\": " << config.dim << ",\n";
    out << "  \"points\": [\n";
    for (std::size_t i = 0; i < config.points.size(); ++i) {
        out << "    [";
        for (std::size_t c = 0; c < config.points[i].size(); ++c) {
            if (c) out << ", ";
            out << format_double(config.points[i][c]);
        }
        out << (i + 1 < config.points.size() ? "],\n" : "]\n");
    }
    out << "  ]\n}\n";
    return out.str();
}

void save_config(const Configuration& config, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError("cannot open output file: " + path);
    out << config_to_json(config);
}

}  // namespace angle_extremes::io
