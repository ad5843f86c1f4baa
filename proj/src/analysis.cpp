#include "angle_extremes/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "angle_extremes/euclidean.hpp"
#include "angle_extremes/hyperbolic.hpp"
#include "angle_extremes/parallel.hpp"
#include "angle_extremes/rng.hpp"

namespace angle_extremes::analysis {

namespace {

constexpr double kPi = std::numbers::pi;

void require_valid(const Configuration& config) {
    if (config.size() < 3) throw std::invalid_argument("configuration needs n >= 3");
    if (config.geometry == Geometry::hyperbolic && config.dim != 2) {
        throw std::invalid_argument("hyperbolic configurations are planar");
    }
    for (const auto& p : config.points) {
        if (static_cast<int>(p.size()) != config.dim) {
            throw std::invalid_argument("point dimension mismatch");
        }
    }
}

std::vector<std::vector<double>> pairwise_hyp_distances(const Configuration& config) {
    const int n = config.size();
    std::vector<std::vector<double>> d(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            d[i][j] = d[j][i] = hyperbolic::hyp_distance(config.points[i], config.points[j]);
        }
    }
    return d;
}

}  // namespace

std::string to_string(WitnessBranch b) {
    return b == WitnessBranch::gap ? "gap" : "base-angle";
}

AngleReport min_angle(const Configuration& config) {
    require_valid(config);
    const int n = config.size();
    AngleReport rep{};
    rep.min_angle = std::numeric_limits<double>::infinity();
    rep.witness = {-1, -1, -1};
    rep.total_triples_scanned = 0;

    // (i, j, k) with i < k enumerated in lexicographic order; strict `<`
    // keeps the first (lowest) argmin.
    if (config.geometry == Geometry::hyperbolic) {
        auto d = pairwise_hyp_distances(config);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                for (int k = i + 1; k < n; ++k) {
                    if (k == j) continue;
                    double a = hyperbolic::hyp_angle_from_sides(d[i][k], d[j][i], d[j][k]);
                    ++rep.total_triples_scanned;
                    if (a < rep.min_angle) {
                        rep.min_angle = a;
                        rep.witness = {i, j, k};
                    }
                }
            }
        }
    } else {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                for (int k = i + 1; k < n; ++k) {
                    if (k == j) continue;
                    double a = euclidean::angle_at(config.points[i], config.points[j],
                                                   config.points[k]);
                    ++rep.total_triples_scanned;
                    if (a < rep.min_angle) {
                        rep.min_angle = a;
                        rep.witness = {i, j, k};
                    }
                }
            }
        }
    }
    return rep;
}

std::vector<double> collect_triple_angles(const Configuration& config) {
    require_valid(config);
    const int n = config.size();
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 2);
    if (config.geometry == Geometry::hyperbolic) {
        auto d = pairwise_hyp_distances(config);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                for (int k = i + 1; k < n; ++k) {
                    if (k == j) continue;
                    out.push_back(hyperbolic::hyp_angle_from_sides(d[i][k], d[j][i], d[j][k]));
                }
            }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                for (int k = i + 1; k < n; ++k) {
                    if (k == j) continue;
                    out.push_back(
                        euclidean::angle_at(config.points[i], config.points[j], config.points[k]));
                }
            }
    }
    return out;
}

WitnessCertificate constructive_witness(const Configuration& config) {
    require_valid(config);
    if (config.dim != 2) {
        throw std::invalid_argument("constructive_witness: planar configurations only");
    }
    const int n = config.size();
    const bool hyp = config.geometry == Geometry::hyperbolic;

    // Hull coordinates: Klein model straightens hyperbolic geodesics, so the
    // Euclidean monotone chain serves both geometries.
    std::vector<std::vector<double>> flat;
    flat.reserve(config.points.size());
    if (hyp) {
        for (const auto& u : config.points) {
            double norm = std::hypot(u[0], u[1]);
            if (norm >= 1.0 - kBoundaryTol) {
                throw BoundaryViolationError("constructive_witness: point too close to boundary");
            }
            auto k = hyperbolic::klein_from_poincare(u);
            flat.push_back({k[0], k[1]});
        }
    } else {
        flat = config.points;
    }

    auto angle_fn = [&](int i, int j, int k) {
        return hyp ? hyperbolic::hyp_angle_at(config.points[i], config.points[j],
                                              config.points[k])
                   : euclidean::angle_at(config.points[i], config.points[j], config.points[k]);
    };

    int p = -1;
    std::vector<int> ordering;
    ordering.reserve(static_cast<std::size_t>(n - 1));

    bool collinear = false;
    std::vector<int> hull;
    try {
        hull = euclidean::strict_hull_indices(flat);
    } catch (const AllCollinearError&) {
        collinear = true;
    }

    if (!collinear) {
        p = *std::min_element(hull.begin(), hull.end());
        auto pos = std::find(hull.begin(), hull.end(), p);
        int next = hull[(static_cast<std::size_t>(pos - hull.begin()) + 1) % hull.size()];
        // Sweep angle from the CCW hull successor; every other point lies in
        // the open cone of width < pi at p, so raw atan2 values order the
        // sweep (values near -pi can only be noise past the far edge).
        double ux = flat[next][0] - flat[p][0];
        double uy = flat[next][1] - flat[p][1];
        std::vector<std::pair<std::pair<double, double>, int>> keyed;
        keyed.reserve(static_cast<std::size_t>(n - 1));
        for (int t = 0; t < n; ++t) {
            if (t == p) continue;
            double vx = flat[t][0] - flat[p][0];
            double vy = flat[t][1] - flat[p][1];
            double phi = std::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
            if (phi < -1.0) phi += 2.0 * kPi;
            keyed.push_back({{phi, vx * vx + vy * vy}, t});
        }
        std::sort(keyed.begin(), keyed.end());
        for (const auto& kv : keyed) ordering.push_back(kv.second);
    } else {
        // Degenerate line: take the flat-lexicographically smallest point,
        // which is an endpoint, so every sweep angle at it is zero.
        p = 0;
        for (int t = 1; t < n; ++t) {
            if (flat[t][0] < flat[p][0] ||
                (flat[t][0] == flat[p][0] && flat[t][1] < flat[p][1])) {
                p = t;
            }
        }
        std::vector<std::pair<double, int>> keyed;
        for (int t = 0; t < n; ++t) {
            if (t == p) continue;
            double vx = flat[t][0] - flat[p][0];
            double vy = flat[t][1] - flat[p][1];
            keyed.push_back({vx * vx + vy * vy, t});
        }
        std::sort(keyed.begin(), keyed.end());
        for (const auto& kv : keyed) ordering.push_back(kv.second);
    }

    WitnessCertificate cert{};
    cert.extremal_index = p;
    cert.ordering = ordering;
    cert.gaps.reserve(static_cast<std::size_t>(n - 2));
    for (int i = 0; i + 1 < n - 1; ++i) {
        cert.gaps.push_back(angle_fn(ordering[static_cast<std::size_t>(i)], p,
                                     ordering[static_cast<std::size_t>(i) + 1]));
    }

    const double bound = kPi / n;
    std::size_t g = static_cast<std::size_t>(
        std::min_element(cert.gaps.begin(), cert.gaps.end()) - cert.gaps.begin());
    bool gap_branch =
        hyp ? cert.gaps[g] < bound : cert.gaps[g] <= bound + kBoundSlack;

    if (gap_branch) {
        cert.branch = WitnessBranch::gap;
        cert.certified_triple = {ordering[g], p, ordering[g + 1]};
        cert.certified_angle = cert.gaps[g];
        return cert;
    }

    // All gaps exceed pi/n, so the sweep angle at p exceeds (n-2)pi/n and the
    // triangle (p, x1, x_{n-1}) leaves its two base angles less than 2pi/n
    // combined; the smaller one certifies.
    cert.branch = WitnessBranch::base_angle;
    int x1 = ordering.front();
    int xl = ordering.back();
    double at_first = angle_fn(p, x1, xl);
    double at_last = angle_fn(p, xl, x1);
    if (at_first <= at_last) {
        cert.certified_triple = {p, x1, xl};
        cert.certified_angle = at_first;
    } else {
        cert.certified_triple = {p, xl, x1};
        cert.certified_angle = at_last;
    }
    return cert;
}

double regularity_score_flat(const std::vector<std::vector<double>>& points) {
    const int n = static_cast<int>(points.size());
    if (n < 3) throw std::invalid_argument("regularity_score: need n >= 3");
    double cx = 0.0, cy = 0.0;
    for (const auto& p : points) {
        cx += p[0];
        cy += p[1];
    }
    cx /= n;
    cy /= n;

    std::vector<double> radii(static_cast<std::size_t>(n));
    std::vector<double> phi(static_cast<std::size_t>(n));
    double rbar = 0.0;
    for (int i = 0; i < n; ++i) {
        double dx = points[static_cast<std::size_t>(i)][0] - cx;
        double dy = points[static_cast<std::size_t>(i)][1] - cy;
        radii[static_cast<std::size_t>(i)] = std::hypot(dx, dy);
        phi[static_cast<std::size_t>(i)] = std::atan2(dy, dx);
        rbar += radii[static_cast<std::size_t>(i)];
    }
    rbar /= n;
    if (!(rbar > 0.0)) return std::numeric_limits<double>::infinity();

    double vr = 0.0;
    for (double r : radii) vr += (r - rbar) * (r - rbar);
    double srad = std::sqrt(vr / n) / rbar;

    std::sort(phi.begin(), phi.end());
    double target = 2.0 * kPi / n;
    double va = 0.0;
    for (int i = 0; i < n; ++i) {
        double next = (i + 1 < n) ? phi[static_cast<std::size_t>(i) + 1]
                                  : phi[0] + 2.0 * kPi;
        double diff = next - phi[static_cast<std::size_t>(i)];
        va += (diff - target) * (diff - target);
    }
    double sang = std::sqrt(va / n) / target;
    return std::hypot(srad, sang);
}

double regularity_score(const Configuration& config) {
    require_valid(config);
    if (config.geometry != Geometry::euclidean || config.dim != 2) {
        throw std::invalid_argument("regularity_score: Euclidean planar configurations only");
    }
    return regularity_score_flat(config.points);
}

Configuration sample_configuration(Geometry geometry, int n, std::mt19937_64& g,
                                   double disk_radius) {
    if (n < 3) throw std::invalid_argument("sample_configuration: need n >= 3");
    Configuration cfg;
    cfg.geometry = geometry;
    cfg.dim = 2;
    cfg.points.reserve(static_cast<std::size_t>(n));
    while (cfg.size() < n) {
        std::vector<double> pt(2);
        if (geometry == Geometry::euclidean) {
            pt[0] = uniform_unit(g);
            pt[1] = uniform_unit(g);
        } else {
            auto s = hyperbolic::sample_hyperbolic_disk(g, disk_radius);
            pt[0] = s[0];
            pt[1] = s[1];
        }
        bool ok = true;
        for (const auto& q : cfg.points) {
            double sep = geometry == Geometry::euclidean ? euclidean::distance(pt, q)
                                                         : hyperbolic::hyp_distance(pt, q);
            if (sep < kSeparationTol) {
                ok = false;
                break;
            }
        }
        if (ok) cfg.points.push_back(std::move(pt));
    }
    return cfg;
}

VerificationSummary verify_theorem(Geometry geometry, int n, long long trials,
                                   std::uint64_t seed, const VerifyOptions& options) {
    if (trials < 1) throw std::invalid_argument("verify_theorem: need trials >= 1");
    if (n < 3) throw std::invalid_argument("verify_theorem: need n >= 3");
    if (options.sampler == Sampler::uniform_square && geometry != Geometry::euclidean) {
        throw std::invalid_argument("verify_theorem: uniform-square sampler is Euclidean");
    }
    if (options.sampler == Sampler::hyperbolic_disk && geometry != Geometry::hyperbolic) {
        throw std::invalid_argument("verify_theorem: disk sampler is hyperbolic");
    }

    const double bound = kPi / n;
    const bool hyp = geometry == Geometry::hyperbolic;

    struct Row {
        double min_angle;
        double certified;
        bool bad;
    };
    std::vector<Row> rows(static_cast<std::size_t>(trials));

    parallel_trials(trials, options.threads, [&](long long t) {
        auto g = make_stream(seed, static_cast<std::uint64_t>(t));
        Configuration cfg = sample_configuration(geometry, n, g, options.disk_radius);
        AngleReport rep = min_angle(cfg);
        WitnessCertificate cert = constructive_witness(cfg);
        bool bad_bound = hyp ? rep.min_angle >= bound : rep.min_angle > bound + kBoundSlack;
        bool bad_cert_bound =
            hyp ? cert.certified_angle >= bound : cert.certified_angle > bound + kBoundSlack;
        bool bad_cert = cert.certified_angle < rep.min_angle;
        rows[static_cast<std::size_t>(t)] =
            Row{rep.min_angle, cert.certified_angle, bad_bound || bad_cert_bound || bad_cert};
    });

    VerificationSummary s{};
    s.geometry = geometry;
    s.n = n;
    s.trials = trials;
    s.seed = seed;
    s.bound = bound;
    s.max_min_angle = -std::numeric_limits<double>::infinity();
    s.max_certified = -std::numeric_limits<double>::infinity();
    s.min_cert_margin = std::numeric_limits<double>::infinity();
    long long first_bad = -1;
    for (long long t = 0; t < trials; ++t) {
        const Row& r = rows[static_cast<std::size_t>(t)];
        s.max_min_angle = std::max(s.max_min_angle, r.min_angle);
        s.max_certified = std::max(s.max_certified, r.certified);
        s.min_cert_margin = std::min(s.min_cert_margin, r.certified - r.min_angle);
        if (r.certified < r.min_angle) ++s.cert_below_oracle;
        if (r.bad && first_bad < 0) first_bad = t;
    }
    if (first_bad >= 0) {
        auto g = make_stream(seed, static_cast<std::uint64_t>(first_bad));
        Configuration cfg = sample_configuration(geometry, n, g, options.disk_radius);
        throw TheoremViolation("theorem bound violated at trial " + std::to_string(first_bad),
                               std::move(cfg), first_bad);
    }
    return s;
}

}  // namespace angle_extremes::analysis
