#include "angle_extremes/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "angle_extremes/rng.hpp"

namespace angle_extremes::hyperbolic {

namespace {

constexpr double kPi = std::numbers::pi;

void require_inside(std::span<const double> u) {
    double n2 = u[0] * u[0] + u[1] * u[1];
    double lim = 1.0 - kBoundaryTol;
    if (!(n2 < lim * lim)) {
        throw BoundaryViolationError("hyperbolic point too close to the disk boundary");
    }
}

}  // namespace

double hyp_distance(std::span<const double> u, std::span<const double> v) {
    require_inside(u);
    require_inside(v);
    double dx = u[0] - v[0];
    double dy = u[1] - v[1];
    // |1 - conj(u) v| with u, v read as complex numbers. The quotient form
    // 2*artanh(|u-v| / |1 - conj(u)v|) matches arccosh(1 + 2|u-v|^2 / ...)
    // exactly but stays fully accurate as u -> v.
    double re = 1.0 - (u[0] * v[0] + u[1] * v[1]);
    double im = u[0] * v[1] - u[1] * v[0];
    double t = std::hypot(dx, dy) / std::hypot(re, im);
    if (t >= 1.0) t = std::nextafter(1.0, 0.0);
    return 2.0 * std::atanh(t);
}

double hyp_angle_from_sides(double a, double b, double c) {
    if (b < kSeparationTol || c < kSeparationTol) {
        throw DegenerateVertexError("hyp_angle: vertex coincides with an endpoint");
    }
    // Law of cosines, numerator cosh(b)cosh(c) - cosh(a) expanded as
    // sinh(s)sinh(s-a) - sinh(s-hi)sinh(s-lo) with s the semiperimeter.
    // Avoids the 1 - 1 cancellation for small triangles, and sorting (b, c)
    // makes the value bit-for-bit symmetric under swapping the endpoints.
    double lo = std::min(b, c);
    double hi = std::max(b, c);
    double s = 0.5 * ((a + lo) + hi);
    double num = std::sinh(s) * std::sinh(s - a) - std::sinh(s - hi) * std::sinh(s - lo);
    double den = std::sinh(lo) * std::sinh(hi);
    return std::acos(std::clamp(num / den, -1.0, 1.0));
}

double hyp_angle_at(std::span<const double> p, std::span<const double> q,
                    std::span<const double> r) {
    double a = hyp_distance(p, r);
    double b = hyp_distance(q, p);
    double c = hyp_distance(q, r);
    return hyp_angle_from_sides(a, b, c);
}

TriangleAngles triangle_report(std::span<const double> p, std::span<const double> q,
                               std::span<const double> r) {
    double a = hyp_distance(q, r);  // opposite p
    double b = hyp_distance(p, r);  // opposite q
    double c = hyp_distance(p, q);  // opposite r
    TriangleAngles t{};
    t.theta_a = hyp_angle_from_sides(a, b, c);
    t.theta_b = hyp_angle_from_sides(b, a, c);
    t.theta_c = hyp_angle_from_sides(c, a, b);
    double mx = std::max({t.theta_a, t.theta_b, t.theta_c});
    if (mx > kPi - 1e-9) {
        throw DegenerateTriangleError("triangle_report: vertices lie on one geodesic");
    }
    t.area = kPi - (t.theta_a + t.theta_b + t.theta_c);
    return t;
}

DiskSpec disk_for_area(double epsilon) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("disk_for_area: need epsilon > 0");
    double x = epsilon / (2.0 * kPi);
    // arccosh(1 + x) evaluated as 2*asinh(sqrt(x/2)); identical value, no
    // precision loss at small x.
    return DiskSpec{epsilon, 2.0 * std::asinh(std::sqrt(0.5 * x))};
}

double disk_area(double r) {
    double sh = std::sinh(0.5 * r);
    return 4.0 * kPi * sh * sh;  // == 2*pi*(cosh r - 1)
}

double poincare_radius(double r) { return std::tanh(0.5 * r); }

Configuration inscribed_regular_ngon(int n, double epsilon) {
    if (n < 3) throw std::invalid_argument("inscribed_regular_ngon: need n >= 3");
    double rho = poincare_radius(disk_for_area(epsilon).radius);
    Configuration c;
    c.geometry = Geometry::hyperbolic;
    c.dim = 2;
    c.points.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double t = 2.0 * kPi * k / n;
        c.points.push_back({rho * std::cos(t), rho * std::sin(t)});
    }
    return c;
}

NGonValidation validate_ngon(const Configuration& config, double epsilon) {
    const int n = config.size();
    if (config.geometry != Geometry::hyperbolic) {
        throw std::invalid_argument("validate_ngon: hyperbolic configurations only");
    }
    if (n < 3) throw std::invalid_argument("validate_ngon: need n >= 3");
    if (!(epsilon > 0.0)) throw std::invalid_argument("validate_ngon: need epsilon > 0");

    std::vector<std::vector<double>> d(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            d[i][j] = d[j][i] = hyp_distance(config.points[i], config.points[j]);
        }
    }

    // Shape gate: all edges equal, and all second-neighbor chords equal.
    // Together with convex position this pins the vertex set to a regular
    // n-gon up to isometry.
    auto check_ring = [&](int step, const char* what) {
        double ref = d[0][step % n];
        for (int k = 1; k < n; ++k) {
            double e = d[k][(k + step) % n];
            if (std::abs(e - ref) > 1e-8 * std::max(1.0, ref)) {
                throw NotRegularError(std::string("validate_ngon: unequal ") + what);
            }
        }
    };
    check_ring(1, "edge lengths");
    if (n >= 5) check_ring(2, "second-neighbor distances");

    NGonValidation v{};
    v.n = n;
    v.theta_n = hyp_angle_from_sides(d[1][n - 1], d[0][1], d[0][n - 1]);

    // Gap angles at vertex 0 between consecutive remaining vertices; their
    // ordering by sweep angle from x1 = v1 is the vertex order itself.
    v.gamma.reserve(static_cast<std::size_t>(n - 2));
    for (int k = 1; k <= n - 2; ++k) {
        v.gamma.push_back(hyp_angle_from_sides(d[k][k + 1], d[0][k], d[0][k + 1]));
    }
    v.alpha_k.resize(v.gamma.size());
    v.beta_k.resize(v.gamma.size());
    double prefix = 0.0;
    for (std::size_t k = 0; k < v.gamma.size(); ++k) {
        v.alpha_k[k] = v.theta_n - prefix;
        prefix += v.gamma[k];
        v.beta_k[k] = prefix;
    }

    double mn = kPi;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int k = i + 1; k < n; ++k) {
                if (k == j) continue;
                mn = std::min(mn, hyp_angle_from_sides(d[i][k], d[j][i], d[j][k]));
            }
        }
    }
    v.min_triple_angle = mn;

    double bound = kPi / n - epsilon;
    double theta_flat = (n - 2) * kPi / n;
    v.theta_in_window = (v.theta_n > theta_flat - epsilon) && (v.theta_n < theta_flat);
    v.gaps_above_bound = std::all_of(v.gamma.begin(), v.gamma.end(),
                                     [&](double g) { return g > bound; });
    v.min_angle_above_bound = mn > bound;
    return v;
}

std::array<double, 2> rotate_about_origin(std::span<const double> u, double phi) {
    double c = std::cos(phi), s = std::sin(phi);
    return {c * u[0] - s * u[1], s * u[0] + c * u[1]};
}

std::array<double, 2> mobius_translate(std::span<const double> z, std::span<const double> a) {
    // (z - a) / (1 - conj(a) z), complex arithmetic over 2-vectors.
    double nr = z[0] - a[0];
    double ni = z[1] - a[1];
    double dr = 1.0 - (a[0] * z[0] + a[1] * z[1]);
    double di = a[1] * z[0] - a[0] * z[1];
    double den = dr * dr + di * di;
    return {(nr * dr + ni * di) / den, (ni * dr - nr * di) / den};
}

std::array<double, 2> klein_from_poincare(std::span<const double> u) {
    double f = 2.0 / (1.0 + u[0] * u[0] + u[1] * u[1]);
    return {f * u[0], f * u[1]};
}

std::array<double, 2> sample_hyperbolic_disk(std::mt19937_64& g, double R) {
    // Radius by inverse CDF of the area element (density sinh(r) dr), angle
    // uniform; returned in Poincare coordinates.
    double u = uniform_unit(g);
    double phi = 2.0 * kPi * uniform_unit(g);
    double r = std::acosh(1.0 + u * (std::cosh(R) - 1.0));
    double rho = poincare_radius(r);
    return {rho * std::cos(phi), rho * std::sin(phi)};
}

}  // namespace angle_extremes::hyperbolic
