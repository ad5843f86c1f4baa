#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "angle_extremes/types.hpp"

namespace angle_extremes::analysis {

struct AngleReport {
    double min_angle;
    std::array<int, 3> witness;  // (i, j, k), angle taken at j
    long long total_triples_scanned;
};

enum class WitnessBranch { gap, base_angle };

std::string to_string(WitnessBranch b);

struct WitnessCertificate {
    int extremal_index;              // p
    std::vector<int> ordering;       // x_1 .. x_{n-1}, by sweep angle at p
    std::vector<double> gaps;        // gamma_1 .. gamma_{n-2}
    std::array<int, 3> certified_triple;
    double certified_angle;
    WitnessBranch branch;
};

struct VerificationSummary {
    Geometry geometry;
    int n;
    long long trials;
    std::uint64_t seed;
    double bound;               // pi / n
    long long violations;       // 0 on return; nonzero paths throw instead
    double max_min_angle;       // largest oracle alpha_min over all trials
    double max_certified;       // largest certificate angle over all trials
    double min_cert_margin;     // min over trials of (certificate - oracle min)
    long long cert_below_oracle;  // trials with certificate < oracle min
};

enum class Sampler { automatic, uniform_square, hyperbolic_disk };

struct VerifyOptions {
    Sampler sampler{Sampler::automatic};
    double disk_radius{1.0};  // hyperbolic sampling radius R
    int threads{0};           // 0 = resolve from env / hardware
};

// Exact minimum over all 3*C(n,3) triple angles; ties resolved toward the
// lexicographically smallest (i, j, k) with i < k.
AngleReport min_angle(const Configuration& config);

// All 3*C(n,3) triple angles, order unspecified.
std::vector<double> collect_triple_angles(const Configuration& config);

// Extremal-point certificate: a specific triple whose angle is at most
// pi/n (Euclidean) or strictly below pi/n (hyperbolic).
WitnessCertificate constructive_witness(const Configuration& config);

// 0 iff the points form a regular n-gon up to rotation, translation, scale.
double regularity_score(const Configuration& config);

// Same score on raw planar coordinates; used for informational reporting on
// hyperbolic (Poincare) coordinates where no similarity gauge exists.
double regularity_score_flat(const std::vector<std::vector<double>>& points);

// n points sampled for the geometry: unit square (Euclidean, iid uniform) or
// hyperbolic-area-uniform disk of hyperbolic radius R. Points closer than
// the separation tolerance to an earlier point are redrawn.
Configuration sample_configuration(Geometry geometry, int n, std::mt19937_64& g,
                                   double disk_radius = 1.0);

// Monte-Carlo theorem check. Each trial samples a configuration from the
// stream derived from (seed, trial), asserts alpha_min <= pi/n (Euclidean,
// 1e-12 slack) or alpha_min < pi/n (hyperbolic, strict), and asserts the
// certificate dominates the oracle minimum. Result is identical for every
// thread count. Throws TheoremViolation with the offending configuration.
VerificationSummary verify_theorem(Geometry geometry, int n, long long trials,
                                   std::uint64_t seed, const VerifyOptions& options = {});

}  // namespace angle_extremes::analysis
