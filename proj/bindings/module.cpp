#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "angle_extremes/analysis.hpp"
#include "angle_extremes/config_io.hpp"
#include "angle_extremes/euclidean.hpp"
#include "angle_extremes/hyperbolic.hpp"
#include "angle_extremes/optimizer.hpp"
#include "angle_extremes/types.hpp"

namespace py = pybind11;
namespace ax = angle_extremes;

namespace {

using Points = std::vector<std::vector<double>>;

ax::Configuration make_config(const std::string& geometry, const Points& points) {
    ax::Configuration c;
    c.geometry = ax::geometry_from_string(geometry);
    c.dim = points.empty() ? 2 : static_cast<int>(points.front().size());
    c.points = points;
    ax::io::validate_domain(c);
    return c;
}

py::dict report_to_dict(const ax::analysis::AngleReport& rep) {
    py::dict d;
    d["min_angle"] = rep.min_angle;
    d["witness"] = py::make_tuple(rep.witness[0], rep.witness[1], rep.witness[2]);
    d["total_triples_scanned"] = rep.total_triples_scanned;
    return d;
}

py::dict cert_to_dict(const ax::analysis::WitnessCertificate& c) {
    py::dict d;
    d["extremal_index"] = c.extremal_index;
    d["ordering"] = c.ordering;
    d["gaps"] = c.gaps;
    d["certified_triple"] =
        py::make_tuple(c.certified_triple[0], c.certified_triple[1], c.certified_triple[2]);
    d["certified_angle"] = c.certified_angle;
    d["branch"] = ax::analysis::to_string(c.branch);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "minimum-angle analysis of point configurations in the Euclidean and "
              "hyperbolic planes";

    py::register_exception<ax::GeometryError>(m, "GeometryError");
    py::register_exception<ax::SchemaError>(m, "SchemaError");

    m.def(
        "angle_at",
        [](const std::vector<double>& p, const std::vector<double>& q,
           const std::vector<double>& r) { return ax::euclidean::angle_at(p, q, r); },
        py::arg("p"), py::arg("q"), py::arg("r"),
        "Euclidean interior angle at q, radians in [0, pi].");

    m.def(
        "convex_hull",
        [](const Points& points) {
            auto hull = ax::euclidean::convex_hull(make_config("euclidean", points));
            py::dict d;
            d["extremal_indices"] = hull.extremal_indices;
            d["interior_indices"] = hull.interior_indices;
            return d;
        },
        py::arg("points"), "Strict convex hull of planar points, counterclockwise.");

    m.def(
        "regular_ngon",
        [](int n, double circumradius) {
            return ax::euclidean::regular_ngon(n, circumradius).points;
        },
        py::arg("n"), py::arg("circumradius") = 1.0);

    m.def(
        "regular_simplex",
        [](int d) { return ax::euclidean::regular_simplex(d).points; }, py::arg("d"));

    m.def(
        "hyp_distance",
        [](const std::vector<double>& u, const std::vector<double>& v) {
            return ax::hyperbolic::hyp_distance(u, v);
        },
        py::arg("u"), py::arg("v"), "Geodesic distance between Poincare-disk points.");

    m.def(
        "hyp_angle_at",
        [](const std::vector<double>& p, const std::vector<double>& q,
           const std::vector<double>& r) { return ax::hyperbolic::hyp_angle_at(p, q, r); },
        py::arg("p"), py::arg("q"), py::arg("r"));

    m.def(
        "triangle_report",
        [](const std::vector<double>& p, const std::vector<double>& q,
           const std::vector<double>& r) {
            auto t = ax::hyperbolic::triangle_report(p, q, r);
            py::dict d;
            d["theta_a"] = t.theta_a;
            d["theta_b"] = t.theta_b;
            d["theta_c"] = t.theta_c;
            d["area"] = t.area;
            return d;
        },
        py::arg("p"), py::arg("q"), py::arg("r"));

    m.def(
        "disk_for_area",
        [](double epsilon) {
            auto s = ax::hyperbolic::disk_for_area(epsilon);
            py::dict d;
            d["epsilon"] = s.epsilon;
            d["radius"] = s.radius;
            return d;
        },
        py::arg("epsilon"));

    m.def(
        "inscribed_regular_ngon",
        [](int n, double epsilon) {
            return ax::hyperbolic::inscribed_regular_ngon(n, epsilon).points;
        },
        py::arg("n"), py::arg("epsilon"));

    m.def(
        "validate_ngon",
        [](const Points& points, double epsilon) {
            auto v = ax::hyperbolic::validate_ngon(make_config("hyperbolic", points), epsilon);
            py::dict d;
            d["n"] = v.n;
            d["theta_n"] = v.theta_n;
            d["gamma"] = v.gamma;
            d["alpha_k"] = v.alpha_k;
            d["beta_k"] = v.beta_k;
            d["min_triple_angle"] = v.min_triple_angle;
            d["theta_in_window"] = v.theta_in_window;
            d["gaps_above_bound"] = v.gaps_above_bound;
            d["min_angle_above_bound"] = v.min_angle_above_bound;
            return d;
        },
        py::arg("points"), py::arg("epsilon"));

    m.def(
        "min_angle",
        [](const std::string& geometry, const Points& points) {
            return report_to_dict(ax::analysis::min_angle(make_config(geometry, points)));
        },
        py::arg("geometry"), py::arg("points"),
        "Exact minimum over all triple angles, with the argmin witness.");

    m.def(
        "constructive_witness",
        [](const std::string& geometry, const Points& points) {
            return cert_to_dict(ax::analysis::constructive_witness(make_config(geometry, points)));
        },
        py::arg("geometry"), py::arg("points"),
        "Extremal-point certificate with a triple at angle <= pi/n.");

    m.def(
        "regularity_score",
        [](const Points& points) {
            return ax::analysis::regularity_score(make_config("euclidean", points));
        },
        py::arg("points"));

    m.def(
        "verify_theorem",
        [](const std::string& geometry, int n, long long trials, std::uint64_t seed,
           double disk_radius, int threads) {
            ax::analysis::VerifyOptions opt;
            opt.disk_radius = disk_radius;
            opt.threads = threads;
            auto s = ax::analysis::verify_theorem(ax::geometry_from_string(geometry), n, trials,
                                                  seed, opt);
            py::dict d;
            d["geometry"] = ax::to_string(s.geometry);
            d["n"] = s.n;
            d["trials"] = s.trials;
            d["seed"] = s.seed;
            d["bound"] = s.bound;
            d["violations"] = s.violations;
            d["max_min_angle"] = s.max_min_angle;
            d["max_certified"] = s.max_certified;
            d["min_cert_margin"] = s.min_cert_margin;
            d["cert_below_oracle"] = s.cert_below_oracle;
            return d;
        },
        py::arg("geometry"), py::arg("n"), py::arg("trials"), py::arg("seed"),
        py::arg("disk_radius") = 1.0, py::arg("threads") = 0,
        "Monte-Carlo check that alpha_min never beats pi/n.");

    m.def(
        "optimize",
        [](const std::string& geometry, int n, long long budget, std::uint64_t seed, int restarts,
           int threads) {
            ax::optimizer::OptimizeOptions opt;
            opt.restarts = restarts;
            opt.threads = threads;
            auto r = ax::optimizer::optimize(ax::geometry_from_string(geometry), n, budget, seed,
                                             opt);
            py::dict d;
            d["best_points"] = r.best_config.points;
            d["best_min_angle"] = r.best_min_angle;
            d["target"] = r.target;
            d["gap"] = r.gap;
            d["regularity"] = r.regularity;
            d["seed"] = r.seed;
            d["winner_restart"] = r.winner_restart;
            d["evaluations"] = r.evaluations;
            d["max_oracle_observed"] = r.max_oracle_observed;
            py::list trace;
            for (const auto& e : r.trace) {
                trace.append(py::make_tuple(e.iteration, e.best_min_angle, e.diameter));
            }
            d["trace"] = trace;
            return d;
        },
        py::arg("geometry"), py::arg("n"), py::arg("budget") = 20000, py::arg("seed") = 1,
        py::arg("restarts") = 16, py::arg("threads") = 0,
        "Two-phase maxi-min search (annealing + soft-min pattern polish).");

    m.def(
        "scale_sweep",
        [](int n, const std::vector<double>& epsilons) {
            auto rows = ax::optimizer::scale_sweep(n, epsilons);
            py::list out;
            for (const auto& row : rows) {
                out.append(py::make_tuple(row.epsilon, row.min_angle, row.gap));
            }
            return out;
        },
        py::arg("n"), py::arg("epsilons"),
        "alpha_min of the inscribed n-gon for each disk area.");
}
