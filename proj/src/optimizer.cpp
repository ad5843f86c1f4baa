#include "angle_extremes/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>

#include "angle_extremes/analysis.hpp"
#include "angle_extremes/euclidean.hpp"
#include "angle_extremes/hyperbolic.hpp"
#include "angle_extremes/parallel.hpp"
#include "angle_extremes/rng.hpp"

namespace angle_extremes::optimizer {

namespace {

constexpr double kPi = std::numbers::pi;

std::span<const double> pt(const std::vector<double>& xs, int i) {
    return {xs.data() + 2 * static_cast<std::size_t>(i), 2};
}

// Exact oracle over flat coordinates; bit-identical to analysis::min_angle
// on the same points (same primitives, same enumeration order).
double exact_min_angle(Geometry geom, int n, const std::vector<double>& xs,
                       std::vector<double>& dist_scratch) {
    double mn = std::numeric_limits<double>::infinity();
    if (geom == Geometry::hyperbolic) {
        dist_scratch.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
        auto d = [&](int i, int j) -> double& {
            return dist_scratch[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                                static_cast<std::size_t>(j)];
        };
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double v = hyperbolic::hyp_distance(pt(xs, i), pt(xs, j));
                d(i, j) = v;
                d(j, i) = v;
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                for (int k = i + 1; k < n; ++k) {
                    if (k == j) continue;
                    mn = std::min(mn, hyperbolic::hyp_angle_from_sides(d(i, k), d(j, i), d(j, k)));
                }
            }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                for (int k = i + 1; k < n; ++k) {
                    if (k == j) continue;
                    mn = std::min(mn, euclidean::angle_at(pt(xs, i), pt(xs, j), pt(xs, k)));
                }
            }
    }
    return mn;
}

void collect_angles(Geometry geom, int n, const std::vector<double>& xs,
                    std::vector<double>& dist_scratch, std::vector<double>& out) {
    out.clear();
    if (geom == Geometry::hyperbolic) {
        dist_scratch.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
        auto d = [&](int i, int j) -> double& {
            return dist_scratch[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                                static_cast<std::size_t>(j)];
        };
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double v = hyperbolic::hyp_distance(pt(xs, i), pt(xs, j));
                d(i, j) = v;
                d(j, i) = v;
            }
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                for (int k = i + 1; k < n; ++k) {
                    if (k == j) continue;
                    out.push_back(hyperbolic::hyp_angle_from_sides(d(i, k), d(j, i), d(j, k)));
                }
            }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                for (int k = i + 1; k < n; ++k) {
                    if (k == j) continue;
                    out.push_back(euclidean::angle_at(pt(xs, i), pt(xs, j), pt(xs, k)));
                }
            }
    }
}

double sq(double x) { return x * x; }

bool point_ok(Geometry geom, int n, const std::vector<double>& xs, int moved) {
    double px = xs[2 * static_cast<std::size_t>(moved)];
    double py = xs[2 * static_cast<std::size_t>(moved) + 1];
    if (geom == Geometry::hyperbolic) {
        if (px * px + py * py >= sq(1.0 - kBoundaryTol)) return false;
        for (int i = 0; i < n; ++i) {
            if (i == moved) continue;
            if (hyperbolic::hyp_distance(pt(xs, moved), pt(xs, i)) < kSeparationTol) return false;
        }
    } else {
        for (int i = 0; i < n; ++i) {
            if (i == moved) continue;
            double dx = xs[2 * static_cast<std::size_t>(i)] - px;
            double dy = xs[2 * static_cast<std::size_t>(i) + 1] - py;
            if (dx * dx + dy * dy < sq(kSeparationTol)) return false;
        }
    }
    return true;
}

bool all_points_ok(Geometry geom, int n, const std::vector<double>& xs) {
    for (int i = 0; i < n; ++i) {
        if (!point_ok(geom, n, xs, i)) return false;
    }
    return true;
}

double config_diameter(Geometry geom, int n, const std::vector<double>& xs) {
    double mx = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double d = geom == Geometry::hyperbolic
                           ? hyperbolic::hyp_distance(pt(xs, i), pt(xs, j))
                           : std::hypot(xs[2 * static_cast<std::size_t>(i)] -
                                            xs[2 * static_cast<std::size_t>(j)],
                                        xs[2 * static_cast<std::size_t>(i) + 1] -
                                            xs[2 * static_cast<std::size_t>(j) + 1]);
            mx = std::max(mx, d);
        }
    return mx;
}

// Similarity gauge: centroid to the origin, RMS radius to 1. The exact
// objective is similarity-invariant, so this only pins coordinates.
void gauge_fix(int n, std::vector<double>& xs) {
    double cx = 0.0, cy = 0.0;
    for (int i = 0; i < n; ++i) {
        cx += xs[2 * static_cast<std::size_t>(i)];
        cy += xs[2 * static_cast<std::size_t>(i) + 1];
    }
    cx /= n;
    cy /= n;
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
        xs[2 * static_cast<std::size_t>(i)] -= cx;
        xs[2 * static_cast<std::size_t>(i) + 1] -= cy;
        ss += sq(xs[2 * static_cast<std::size_t>(i)]) +
              sq(xs[2 * static_cast<std::size_t>(i) + 1]);
    }
    double rms = std::sqrt(ss / n);
    if (rms > 0.0) {
        for (double& v : xs) v /= rms;
    }
}

struct RestartOutcome {
    std::vector<double> best_xs;
    double best_value = -std::numeric_limits<double>::infinity();
    std::vector<TraceEntry> local;  // iteration = local eval count
    long long evals = 0;
    double max_seen = -std::numeric_limits<double>::infinity();
};

class RestartRun {
public:
    RestartRun(Geometry geom, int n, const OptimizeOptions& opt, std::mt19937_64 g)
        : geom_(geom), n_(n), opt_(opt), g_(std::move(g)) {}

    RestartOutcome run(long long budget) {
        init();
        anneal(budget);
        // Polish resumes from the best exact iterate, not the final walker.
        std::vector<double> xs = out_.best_xs;
        long long round_cap = std::max<long long>(500, budget / 8);
        for (double beta : opt_.betas) {
            pattern_round(xs, beta, round_cap);
        }
        if (geom_ == Geometry::euclidean) {
            gauge_fix(n_, xs);
            consider(xs);
        }
        pattern_round(xs, 0.0, std::max<long long>(1000, budget / 4));
        return std::move(out_);
    }

private:
    double exact(const std::vector<double>& xs) {
        ++out_.evals;
        double v = exact_min_angle(geom_, n_, xs, dist_scratch_);
        out_.max_seen = std::max(out_.max_seen, v);
        if (v > out_.best_value) {
            out_.best_value = v;
            out_.best_xs = xs;
            out_.local.push_back({out_.evals, v, config_diameter(geom_, n_, xs)});
        }
        return v;
    }

    // Exact evaluation of a candidate already measured by a surrogate.
    void consider(const std::vector<double>& xs) { (void)exact(xs); }

    void init() {
        std::vector<double> xs(2 * static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) {
            for (;;) {
                if (geom_ == Geometry::hyperbolic) {
                    auto s = hyperbolic::sample_hyperbolic_disk(g_, opt_.init_disk_radius);
                    xs[2 * static_cast<std::size_t>(i)] = s[0];
                    xs[2 * static_cast<std::size_t>(i) + 1] = s[1];
                } else {
                    xs[2 * static_cast<std::size_t>(i)] = uniform_unit(g_);
                    xs[2 * static_cast<std::size_t>(i) + 1] = uniform_unit(g_);
                }
                bool ok = true;
                for (int j = 0; j < i; ++j) {
                    double sep = geom_ == Geometry::hyperbolic
                                     ? hyperbolic::hyp_distance(pt(xs, i), pt(xs, j))
                                     : std::hypot(xs[2 * static_cast<std::size_t>(i)] -
                                                      xs[2 * static_cast<std::size_t>(j)],
                                                  xs[2 * static_cast<std::size_t>(i) + 1] -
                                                      xs[2 * static_cast<std::size_t>(j) + 1]);
                    if (sep < kSeparationTol) {
                        ok = false;
                        break;
                    }
                }
                if (ok) break;
            }
        }
        if (geom_ == Geometry::euclidean) gauge_fix(n_, xs);
        cur_ = std::move(xs);
        fcur_ = exact(cur_);
    }

    void anneal(long long budget) {
        const double denom = budget > 1 ? static_cast<double>(budget - 1) : 1.0;
        std::vector<double> trial;
        for (long long it = 0; it < budget; ++it) {
            double frac = static_cast<double>(it) / denom;
            double sigma = opt_.sigma0 * std::pow(opt_.sigma_final / opt_.sigma0, frac);
            double temp = opt_.temp0 * std::pow(opt_.temp_final / opt_.temp0, frac);

            int idx = std::min(n_ - 1, static_cast<int>(uniform_unit(g_) * n_));
            double dx = sigma * normal_unit(g_);
            double dy = sigma * normal_unit(g_);
            trial = cur_;
            trial[2 * static_cast<std::size_t>(idx)] += dx;
            trial[2 * static_cast<std::size_t>(idx) + 1] += dy;
            if (!point_ok(geom_, n_, trial, idx)) continue;

            double ftrial = exact(trial);
            if (ftrial >= fcur_ || uniform_unit(g_) < std::exp((ftrial - fcur_) / temp)) {
                cur_ = trial;
                fcur_ = ftrial;
            }
            if (geom_ == Geometry::euclidean && (it + 1) % 512 == 0) {
                gauge_fix(n_, cur_);
                fcur_ = exact(cur_);
            }
        }
    }

    // Compass search over all 2n coordinates. beta > 0 optimizes the softmin
    // surrogate (with exact re-measurement of accepted steps); beta == 0
    // optimizes the exact objective directly.
    void pattern_round(std::vector<double>& xs, double beta, long long cap) {
        const bool surrogate = beta > 0.0;
        long long used = 0;
        auto measure = [&](const std::vector<double>& c) {
            if (surrogate) {
                collect_angles(geom_, n_, c, dist_scratch_, angle_scratch_);
                ++used;
                return soft_min(angle_scratch_, beta);
            }
            ++used;
            return exact(c);
        };
        if (!all_points_ok(geom_, n_, xs)) return;
        double fbest = measure(xs);
        double step = opt_.pattern_step0;
        std::vector<double> trial;
        while (used < cap && step > opt_.pattern_step_min) {
            bool improved = false;
            for (std::size_t c = 0; c < xs.size() && used < cap; ++c) {
                for (double sgn : {1.0, -1.0}) {
                    trial = xs;
                    trial[c] += sgn * step;
                    if (!point_ok(geom_, n_, trial, static_cast<int>(c / 2))) continue;
                    double ft = measure(trial);
                    if (ft > fbest) {
                        xs = trial;
                        fbest = ft;
                        improved = true;
                        if (surrogate) consider(xs);
                        break;
                    }
                    if (used >= cap) break;
                }
            }
            if (!improved) step *= 0.5;
        }
    }

    Geometry geom_;
    int n_;
    const OptimizeOptions& opt_;
    std::mt19937_64 g_;
    std::vector<double> cur_;
    double fcur_ = 0.0;
    std::vector<double> dist_scratch_;
    std::vector<double> angle_scratch_;
    RestartOutcome out_;
};

}  // namespace

OptimizerResult optimize(Geometry geometry, int n, long long budget, std::uint64_t seed,
                         const OptimizeOptions& options) {
    if (n < 3) throw std::invalid_argument("optimize: need n >= 3");
    if (budget < 1) throw std::invalid_argument("optimize: need budget >= 1");
    if (options.restarts < 1) throw std::invalid_argument("optimize: need restarts >= 1");

    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(options.restarts));
    parallel_trials(options.restarts, options.threads, [&](long long r) {
        RestartRun run(geometry, n, options,
                       make_stream(seed, static_cast<std::uint64_t>(r)));
        outcomes[static_cast<std::size_t>(r)] = run.run(budget);
    });

    int winner = 0;
    for (int r = 1; r < options.restarts; ++r) {
        if (outcomes[static_cast<std::size_t>(r)].best_value >
            outcomes[static_cast<std::size_t>(winner)].best_value) {
            winner = r;
        }
    }

    OptimizerResult res{};
    res.seed = seed;
    res.winner_restart = winner;
    res.target = kPi / n;

    // Global trace: restart-local improvement records replayed in restart
    // order with cumulative iteration offsets; deterministic for any thread
    // count because it never depends on execution interleaving.
    long long offset = 0;
    double global_best = -std::numeric_limits<double>::infinity();
    res.max_oracle_observed = -std::numeric_limits<double>::infinity();
    for (const auto& out : outcomes) {
        for (const auto& e : out.local) {
            if (e.best_min_angle > global_best) {
                global_best = e.best_min_angle;
                res.trace.push_back({offset + e.iteration, e.best_min_angle, e.diameter});
            }
        }
        offset += out.evals;
        res.max_oracle_observed = std::max(res.max_oracle_observed, out.max_seen);
    }
    res.evaluations = offset;

    const auto& bx = outcomes[static_cast<std::size_t>(winner)].best_xs;
    res.best_config.geometry = geometry;
    res.best_config.dim = 2;
    res.best_config.points.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        res.best_config.points.push_back({bx[2 * static_cast<std::size_t>(i)],
                                          bx[2 * static_cast<std::size_t>(i) + 1]});
    }
    res.best_min_angle = analysis::min_angle(res.best_config).min_angle;
    res.gap = res.target - res.best_min_angle;
    res.regularity = analysis::regularity_score_flat(res.best_config.points);
    return res;
}

double soft_min(const std::vector<double>& values, double beta) {
    // Stabilized about the exact minimum: the sum is in [1, T], so the result
    // sits in [m - log(T)/beta, m].
    double m = *std::min_element(values.begin(), values.end());
    double s = 0.0;
    for (double v : values) s += std::exp(-beta * (v - m));
    return m - std::log(s) / beta;
}

std::vector<SweepRow> scale_sweep(int n, const std::vector<double>& epsilons) {
    std::vector<SweepRow> rows;
    rows.reserve(epsilons.size());
    for (double eps : epsilons) {
        Configuration c = hyperbolic::inscribed_regular_ngon(n, eps);
        double mn = analysis::min_angle(c).min_angle;
        rows.push_back({eps, mn, kPi / n - mn});
    }
    return rows;
}

}  // namespace angle_extremes::optimizer
