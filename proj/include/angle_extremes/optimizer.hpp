#pragma once

#include <cstdint>
#include <vector>

#include "angle_extremes/types.hpp"

namespace angle_extremes::optimizer {

struct TraceEntry {
    long long iteration;    // cumulative oracle evaluations when the best improved
    double best_min_angle;  // exact oracle value of the best-so-far configuration
    double diameter;        // metric diameter of that configuration
};

struct OptimizeOptions {
    int restarts{16};
    double sigma0{0.3};
    double sigma_final{1e-4};
    double temp0{0.05};
    double temp_final{1e-7};
    std::vector<double> betas{50.0, 200.0, 1000.0};
    double pattern_step0{0.02};
    double pattern_step_min{1e-9};
    double init_disk_radius{1.0};  // hyperbolic initialization radius
    int threads{0};
};

struct OptimizerResult {
    Configuration best_config;
    double best_min_angle;  // equals min_angle(best_config) exactly
    double target;          // pi / n
    double gap;             // target - best_min_angle
    double regularity;      // flat-coordinate regularity score of best_config
    std::vector<TraceEntry> trace;
    std::uint64_t seed;
    int winner_restart;
    long long evaluations;
    double max_oracle_observed;  // largest exact value seen on any iterate
};

// Two-phase maxi-min search: simulated annealing over point coordinates,
// then pattern-search polish on soft-min surrogates of increasing beta
// finishing on the exact objective. Restarts are independent streams of
// (seed, restart); the merge and the trace are deterministic for any thread
// count. Euclidean runs are gauge-fixed (centroid 0, unit RMS radius);
// hyperbolic runs keep raw Poincare coordinates behind a boundary barrier.
OptimizerResult optimize(Geometry geometry, int n, long long budget, std::uint64_t seed,
                         const OptimizeOptions& options = {});

struct SweepRow {
    double epsilon;
    double min_angle;
    double gap;  // pi/n - min_angle, positive
};

// Exact alpha_min of the inscribed regular n-gon for each disk area epsilon.
std::vector<SweepRow> scale_sweep(int n, const std::vector<double>& epsilons);

// Smooth lower envelope -(1/beta) log sum exp(-beta * theta_t); always within
// [min - log(T)/beta, min] of the true minimum of the T values.
double soft_min(const std::vector<double>& values, double beta);

}  // namespace angle_extremes::optimizer
