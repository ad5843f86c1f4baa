#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "angle_extremes/analysis.hpp"
#include "angle_extremes/config_io.hpp"
#include "angle_extremes/euclidean.hpp"
#include "angle_extremes/hyperbolic.hpp"
#include "angle_extremes/optimizer.hpp"
#include "angle_extremes/types.hpp"

namespace ax = angle_extremes;

namespace {

constexpr double kPi = std::numbers::pi;

std::string angle12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string full17(double v) { return ax::io::format_double(v); }

void cmd_min_angle(const std::string& input) {
    ax::Configuration cfg = ax::io::load_config(input);
    ax::analysis::AngleReport rep = ax::analysis::min_angle(cfg);
    double bound = kPi / cfg.size();
    std::cout << "geometry = " << ax::to_string(cfg.geometry) << "\n";
    std::cout << "n = " << cfg.size() << "\n";
    std::cout << "min_angle_rad = " << angle12(rep.min_angle) << "\n";
    std::cout << "min_angle_deg = " << angle12(rep.min_angle * 180.0 / kPi) << "\n";
    std::cout << "witness = (" << rep.witness[0] << ", " << rep.witness[1] << ", "
              << rep.witness[2] << ")  angle at index " << rep.witness[1] << "\n";
    std::cout << "bound = " << angle12(bound) << "  (pi/" << cfg.size() << ")\n";
    std::cout << "meets_bound = "
              << (rep.min_angle <= bound + ax::kBoundSlack ? "true" : "false") << "\n";
}

void cmd_witness(const std::string& input) {
    ax::Configuration cfg = ax::io::load_config(input);
    ax::analysis::WitnessCertificate cert = ax::analysis::constructive_witness(cfg);
    nlohmann::json j;
    j["extremal_index"] = cert.extremal_index;
    j["ordering"] = cert.ordering;
    j["gaps"] = cert.gaps;
    j["certified_triple"] = cert.certified_triple;
    j["certified_angle"] = cert.certified_angle;
    j["branch"] = ax::analysis::to_string(cert.branch);
    j["bound"] = kPi / cfg.size();
    std::cout << j.dump(2) << "\n";
}

void print_ngon_validation(const ax::hyperbolic::NGonValidation& v) {
    nlohmann::json j;
    j["n"] = v.n;
    j["theta_n"] = v.theta_n;
    j["gamma"] = v.gamma;
    j["alpha_k"] = v.alpha_k;
    j["beta_k"] = v.beta_k;
    j["min_triple_angle"] = v.min_triple_angle;
    j["theta_in_window"] = v.theta_in_window;
    j["gaps_above_bound"] = v.gaps_above_bound;
    j["min_angle_above_bound"] = v.min_angle_above_bound;
    std::cout << j.dump(2) << "\n";
}

void cmd_ngon(int n, const std::string& geometry, double area_eps, bool has_eps,
              double circumradius, bool has_radius, const std::string& out) {
    ax::Geometry geom = ax::geometry_from_string(geometry);
    if (geom == ax::Geometry::euclidean) {
        if (has_eps) throw ax::SchemaError("--area-eps applies to hyperbolic n-gons only");
        ax::Configuration cfg = ax::euclidean::regular_ngon(n, has_radius ? circumradius : 1.0);
        ax::io::save_config(cfg, out);
        std::cout << "wrote " << out << " (euclidean regular " << n << "-gon)\n";
    } else {
        if (has_radius) throw ax::SchemaError("--circumradius applies to euclidean n-gons only");
        if (!has_eps) throw ax::SchemaError("hyperbolic n-gons need --area-eps");
        ax::Configuration cfg = ax::hyperbolic::inscribed_regular_ngon(n, area_eps);
        ax::io::save_config(cfg, out);
        std::cout << "wrote " << out << " (hyperbolic inscribed " << n << "-gon, area "
                  << angle12(area_eps) << ")\n";
        print_ngon_validation(ax::hyperbolic::validate_ngon(cfg, area_eps));
    }
}

void cmd_verify(const std::string& geometry, int n, long long trials, std::uint64_t seed,
                int threads) {
    ax::analysis::VerifyOptions opt;
    opt.threads = threads;
    ax::analysis::VerificationSummary s =
        ax::analysis::verify_theorem(ax::geometry_from_string(geometry), n, trials, seed, opt);
    std::cout << "geometry = " << ax::to_string(s.geometry) << "\n";
    std::cout << "n = " << s.n << "\n";
    std::cout << "trials = " << s.trials << "\n";
    std::cout << "seed = " << s.seed << "\n";
    std::cout << "bound = " << angle12(s.bound) << "  (pi/" << s.n << ")\n";
    std::cout << "violations = " << s.violations << "\n";
    std::cout << "max_min_angle = " << angle12(s.max_min_angle) << "\n";
    std::cout << "max_certified = " << angle12(s.max_certified) << "\n";
    std::cout << "min_cert_margin = " << angle12(s.min_cert_margin) << "\n";
    std::cout << "cert_below_oracle = " << s.cert_below_oracle << "\n";
}

void cmd_optimize(const std::string& geometry, int n, long long budget, std::uint64_t seed,
                  int restarts, const std::string& trace_path, const std::string& out_path,
                  int threads) {
    ax::optimizer::OptimizeOptions opt;
    opt.restarts = restarts;
    opt.threads = threads;
    ax::optimizer::OptimizerResult res =
        ax::optimizer::optimize(ax::geometry_from_string(geometry), n, budget, seed, opt);
    std::cout << "geometry = " << geometry << "\n";
    std::cout << "n = " << n << "\n";
    std::cout << "target = " << angle12(res.target) << "  (pi/" << n << ")\n";
    std::cout << "best_min_angle = " << angle12(res.best_min_angle) << "\n";
    std::cout << "gap = " << angle12(res.gap) << "\n";
    std::cout << "regularity = " << angle12(res.regularity) << "\n";
    std::cout << "seed = " << res.seed << "\n";
    std::cout << "winner_restart = " << res.winner_restart << "\n";
    std::cout << "evaluations = " << res.evaluations << "\n";
    std::cout << "trace_entries = " << res.trace.size() << "\n";
    if (!trace_path.empty()) {
        std::ofstream tr(trace_path);
        if (!tr) throw ax::SchemaError("cannot open trace file: " + trace_path);
        tr << "iteration,best_min_angle,gap\n";
        for (const auto& e : res.trace) {
            tr << e.iteration << "," << full17(e.best_min_angle) << ","
               << full17(res.target - e.best_min_angle) << "\n";
        }
        std::cout << "trace_csv = " << trace_path << "\n";
    }
    if (!out_path.empty()) {
        ax::io::save_config(res.best_config, out_path);
        std::cout << "best_config = " << out_path << "\n";
    }
}

void cmd_hist(const std::string& input, int bins, const std::string& out) {
    if (bins < 1) throw ax::SchemaError("--bins must be positive");
    ax::Configuration cfg = ax::io::load_config(input);
    std::vector<double> angles = ax::analysis::collect_triple_angles(cfg);
    std::vector<long long> count(static_cast<std::size_t>(bins), 0);
    double width = kPi / bins;
    for (double a : angles) {
        double t = a / width;
        long long k = static_cast<long long>(std::floor(t));
        // Angles that sit on a bin edge to within rounding go to the upper
        // bin, so exact pi/n minima land in the bin that starts at pi/n.
        if (t - static_cast<double>(k) > 1.0 - 1e-9) ++k;
        if (k < 0) k = 0;
        if (k >= bins) k = bins - 1;
        ++count[static_cast<std::size_t>(k)];
    }
    std::ofstream os(out);
    if (!os) throw ax::SchemaError("cannot open output file: " + out);
    os << "bin_lo,bin_hi,count\n";
    for (int b = 0; b < bins; ++b) {
        os << full17(b * width) << "," << full17((b + 1) * width) << ","
           << count[static_cast<std::size_t>(b)] << "\n";
    }
    std::cout << "wrote " << out << " (" << angles.size() << " angles in " << bins
              << " bins)\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimum-angle analysis of point configurations in the Euclidean "
                 "and hyperbolic planes"};
    app.require_subcommand(1);

    std::string input, geometry, out_path, trace_path;
    int n = 0, bins = 0, restarts = 16, threads = 0;
    long long trials = 1000, budget = 20000;
    std::uint64_t seed = 1;
    double area_eps = 0.0, circumradius = 0.0;

    auto* c_min = app.add_subcommand("min-angle", "exact minimum triple angle of a configuration");
    c_min->add_option("--input", input, "configuration JSON file")->required();

    auto* c_wit = app.add_subcommand("witness", "extremal-point certificate as JSON");
    c_wit->add_option("--input", input, "configuration JSON file")->required();

    auto* c_ngon = app.add_subcommand("ngon", "generate a regular n-gon configuration");
    c_ngon->add_option("--n", n, "vertex count")->required();
    c_ngon->add_option("--geometry", geometry, "euclidean|hyperbolic")->required();
    auto* eps_opt = c_ngon->add_option("--area-eps", area_eps, "disk area (hyperbolic)");
    auto* rad_opt = c_ngon->add_option("--circumradius", circumradius, "circumradius (euclidean)");
    c_ngon->add_option("--out", out_path, "output configuration path")->required();

    auto* c_ver = app.add_subcommand("verify", "Monte-Carlo theorem check");
    c_ver->add_option("--geometry", geometry, "euclidean|hyperbolic")->required();
    c_ver->add_option("--n", n, "points per configuration")->required();
    c_ver->add_option("--trials", trials, "number of sampled configurations");
    c_ver->add_option("--seed", seed, "RNG seed");
    c_ver->add_option("--threads", threads, "worker threads (0 = auto)");

    auto* c_opt = app.add_subcommand("optimize", "search for the maxi-min configuration");
    c_opt->add_option("--geometry", geometry, "euclidean|hyperbolic")->required();
    c_opt->add_option("--n", n, "number of points")->required();
    c_opt->add_option("--budget", budget, "annealing iterations per restart");
    c_opt->add_option("--seed", seed, "RNG seed");
    c_opt->add_option("--restarts", restarts, "independent restarts");
    c_opt->add_option("--trace", trace_path, "best-so-far trace CSV path");
    c_opt->add_option("--out", out_path, "write the best configuration here");
    c_opt->add_option("--threads", threads, "worker threads (0 = auto)");

    auto* c_hist = app.add_subcommand("hist", "histogram of all triple angles");
    c_hist->add_option("--input", input, "configuration JSON file")->required();
    c_hist->add_option("--bins", bins, "bin count over [0, pi]")->required();
    c_hist->add_option("--out", out_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (c_min->parsed()) {
            cmd_min_angle(input);
        } else if (c_wit->parsed()) {
            cmd_witness(input);
        } else if (c_ngon->parsed()) {
            cmd_ngon(n, geometry, area_eps, eps_opt->count() > 0, circumradius,
                     rad_opt->count() > 0, out_path);
        } else if (c_ver->parsed()) {
            cmd_verify(geometry, n, trials, seed, threads);
        } else if (c_opt->parsed()) {
            cmd_optimize(geometry, n, budget, seed, restarts, trace_path, out_path, threads);
        } else if (c_hist->parsed()) {
            cmd_hist(input, bins, out_path);
        }
    } catch (const ax::TheoremViolation& e) {
        std::cerr << "THEOREM VIOLATION: " << e.what() << "\n";
        std::cerr << ax::io::config_to_json(e.config);
        return 1;
    } catch (const ax::SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ax::GeometryError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
