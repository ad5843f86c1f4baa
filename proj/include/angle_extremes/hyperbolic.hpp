#pragma once

#include <array>
#include <random>
#include <span>
#include <vector>

#include "angle_extremes/types.hpp"

namespace angle_extremes::hyperbolic {

struct TriangleAngles {
    double theta_a;
    double theta_b;
    double theta_c;
    double area;
};

struct DiskSpec {
    double epsilon;
    double radius;  // hyperbolic length r_eps
};

struct NGonValidation {
    int n;
    double theta_n;
    std::vector<double> gamma;    // n-2 gap angles at vertex 0
    std::vector<double> alpha_k;  // alpha_k = theta_n - sum_{l<k} gamma_l
    std::vector<double> beta_k;   // beta_k  = sum_{l<=k} gamma_l
    double min_triple_angle;      // over all 3*C(n,3) triples
    bool theta_in_window;         // (n-2)pi/n - eps < theta_n < (n-2)pi/n
    bool gaps_above_bound;        // every gamma_k > pi/n - eps
    bool min_angle_above_bound;   // min_triple_angle > pi/n - eps
};

// Geodesic distance between Poincare-disk points. Evaluated as
// 2*artanh(|u - v| / |1 - conj(u) v|), which equals the arccosh closed form
// but keeps full precision for nearby points.
double hyp_distance(std::span<const double> u, std::span<const double> v);

// Angle opposite side a in a triangle with sides (a, b, c), via the
// hyperbolic law of cosines. Symmetric in b and c bit-for-bit.
double hyp_angle_from_sides(double a, double b, double c);

// Interior angle at q of the geodesic triangle (p, q, r).
double hyp_angle_at(std::span<const double> p, std::span<const double> q,
                    std::span<const double> r);

// Angles at p, q, r plus area = pi - angle sum.
TriangleAngles triangle_report(std::span<const double> p, std::span<const double> q,
                               std::span<const double> r);

DiskSpec disk_for_area(double epsilon);

// Hyperbolic area of the metric disk of hyperbolic radius r.
double disk_area(double r);

// Euclidean (Poincare) radius of the hyperbolic circle of radius r about 0.
double poincare_radius(double r);

// n vertices on the boundary of the area-epsilon disk about the origin,
// equally spaced by 2*pi/n.
Configuration inscribed_regular_ngon(int n, double epsilon);

NGonValidation validate_ngon(const Configuration& config, double epsilon);

// Disk automorphisms, as 2-vectors in Poincare coordinates.
std::array<double, 2> rotate_about_origin(std::span<const double> u, double phi);
// z -> (z - a) / (1 - conj(a) z); sends a to the origin.
std::array<double, 2> mobius_translate(std::span<const double> z, std::span<const double> a);

// Beltrami-Klein coordinates of a Poincare point: k = 2u / (1 + |u|^2).
// Geodesics map to straight chords, so Euclidean hulls apply.
std::array<double, 2> klein_from_poincare(std::span<const double> u);

// Uniform w.r.t. hyperbolic area in the disk of hyperbolic radius R about 0.
std::array<double, 2> sample_hyperbolic_disk(std::mt19937_64& g, double R);

}  // namespace angle_extremes::hyperbolic
