#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace testsupport {

namespace {

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(a, m, fa, flm, fm);
    double right = simpson(m, b, fm, frm, fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate_fn(const std::function<double(double)>& f, double a, double b, double tol) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = simpson(a, b, fa, fm, fb);
    return adapt(f, a, b, fa, fm, fb, whole, tol, 50);
}

double dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

std::array<double, 2> klein(std::span<const double> u) {
    double f = 2.0 / (1.0 + u[0] * u[0] + u[1] * u[1]);
    return {f * u[0], f * u[1]};
}

double klein_density(double x, double y) {
    double w = 1.0 - x * x - y * y;
    return 1.0 / (w * std::sqrt(w));
}

double tri_rule(const std::array<double, 2>& a, const std::array<double, 2>& b,
                const std::array<double, 2>& c) {
    double area = 0.5 * std::abs((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]));
    double f1 = klein_density(0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1]));
    double f2 = klein_density(0.5 * (b[0] + c[0]), 0.5 * (b[1] + c[1]));
    double f3 = klein_density(0.5 * (c[0] + a[0]), 0.5 * (c[1] + a[1]));
    return area * (f1 + f2 + f3) / 3.0;
}

double tri_adapt(const std::array<double, 2>& a, const std::array<double, 2>& b,
                 const std::array<double, 2>& c, double whole, double tol, int depth) {
    std::array<double, 2> ab{0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])};
    std::array<double, 2> bc{0.5 * (b[0] + c[0]), 0.5 * (b[1] + c[1])};
    std::array<double, 2> ca{0.5 * (c[0] + a[0]), 0.5 * (c[1] + a[1])};
    double q1 = tri_rule(a, ab, ca);
    double q2 = tri_rule(ab, b, bc);
    double q3 = tri_rule(ca, bc, c);
    double q4 = tri_rule(ab, bc, ca);
    double refined = q1 + q2 + q3 + q4;
    double delta = refined - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return refined + delta / 15.0;
    }
    double t = 0.25 * tol;
    return tri_adapt(a, ab, ca, q1, t, depth - 1) + tri_adapt(ab, b, bc, q2, t, depth - 1) +
           tri_adapt(ca, bc, c, q3, t, depth - 1) + tri_adapt(ab, bc, ca, q4, t, depth - 1);
}

// Euclidean tangent direction at q of the geodesic from q to x.
std::array<double, 2> tangent_dir(std::span<const double> q, std::span<const double> x) {
    double cross = q[0] * x[1] - q[1] * x[0];
    double tx, ty;
    if (std::abs(cross) >= 1e-3) {
        // Geodesic circle orthogonal to the unit circle: 2 c.q = |q|^2 + 1,
        // 2 c.x = |x|^2 + 1.
        double rq = q[0] * q[0] + q[1] * q[1] + 1.0;
        double rx = x[0] * x[0] + x[1] * x[1] + 1.0;
        double det = 4.0 * cross;
        double c0 = (2.0 * x[1] * rq - 2.0 * q[1] * rx) / det;
        double c1 = (2.0 * q[0] * rx - 2.0 * x[0] * rq) / det;
        // Tangent is perpendicular to the circle radius at q, oriented along
        // the chord toward x.
        tx = -(q[1] - c1);
        ty = q[0] - c0;
        if (tx * (x[0] - q[0]) + ty * (x[1] - q[1]) < 0.0) {
            tx = -tx;
            ty = -ty;
        }
    } else {
        // Near-diameter geodesic: translate q to the origin with the disk
        // automorphism w = (z - q) / (1 - conj(q) z); the image geodesic is
        // straight through 0, so the direction of w(x) is the tangent there,
        // and conformality carries the angle back to q.
        double nr = x[0] - q[0];
        double ni = x[1] - q[1];
        double dr = 1.0 - (q[0] * x[0] + q[1] * x[1]);
        double di = q[1] * x[0] - q[0] * x[1];
        double den = dr * dr + di * di;
        tx = (nr * dr + ni * di) / den;
        ty = (ni * dr - nr * di) / den;
    }
    double nrm = std::hypot(tx, ty);
    return {tx / nrm, ty / nrm};
}

}  // namespace

double integrate(double (*f)(double), double a, double b, double tol) {
    return integrate_fn(f, a, b, tol);
}

double euclid_angle_oracle(std::span<const double> p, std::span<const double> q,
                           std::span<const double> r) {
    double a = dist(p, r);
    double b = dist(q, p);
    double c = dist(q, r);
    double cosv = (b * b + c * c - a * a) / (2.0 * b * c);
    return std::acos(std::clamp(cosv, -1.0, 1.0));
}

double euclid_min_angle_oracle(const std::vector<std::vector<double>>& pts) {
    const int n = static_cast<int>(pts.size());
    double mn = 1e300;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int k = i + 1; k < n; ++k) {
                if (k == j) continue;
                mn = std::min(mn, euclid_angle_oracle(pts[static_cast<std::size_t>(i)],
                                                      pts[static_cast<std::size_t>(j)],
                                                      pts[static_cast<std::size_t>(k)]));
            }
        }
    return mn;
}

double hyp_distance_acosh(std::span<const double> u, std::span<const double> v) {
    double du = (u[0] - v[0]) * (u[0] - v[0]) + (u[1] - v[1]) * (u[1] - v[1]);
    double wu = 1.0 - (u[0] * u[0] + u[1] * u[1]);
    double wv = 1.0 - (v[0] * v[0] + v[1] * v[1]);
    return std::acosh(1.0 + 2.0 * du / (wu * wv));
}

double hyp_angle_cosh(double a, double b, double c) {
    double cosv = (std::cosh(b) * std::cosh(c) - std::cosh(a)) / (std::sinh(b) * std::sinh(c));
    return std::acos(std::clamp(cosv, -1.0, 1.0));
}

double hyp_min_angle_oracle(const std::vector<std::vector<double>>& pts) {
    const int n = static_cast<int>(pts.size());
    double mn = 1e300;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int k = i + 1; k < n; ++k) {
                if (k == j) continue;
                double a = hyp_distance_acosh(pts[static_cast<std::size_t>(i)],
                                              pts[static_cast<std::size_t>(k)]);
                double b = hyp_distance_acosh(pts[static_cast<std::size_t>(j)],
                                              pts[static_cast<std::size_t>(i)]);
                double c = hyp_distance_acosh(pts[static_cast<std::size_t>(j)],
                                              pts[static_cast<std::size_t>(k)]);
                mn = std::min(mn, hyp_angle_cosh(a, b, c));
            }
        }
    return mn;
}

double radial_length_quadrature(double t) {
    return integrate_fn([](double s) { return 2.0 / (1.0 - s * s); }, 0.0, t, 1e-14);
}

double disk_area_quadrature(double r) {
    double P = std::tanh(0.5 * r);
    double inner = integrate_fn(
        [](double rho) {
            double w = 1.0 - rho * rho;
            return 4.0 * rho / (w * w);
        },
        0.0, P, 1e-14);
    return 2.0 * std::acos(-1.0) * inner;
}

double triangle_area_quadrature(std::span<const double> p, std::span<const double> q,
                                std::span<const double> r, double tol) {
    auto a = klein(p);
    auto b = klein(q);
    auto c = klein(r);
    return tri_adapt(a, b, c, tri_rule(a, b, c), tol, 28);
}

double tangent_angle_oracle(std::span<const double> p, std::span<const double> q,
                            std::span<const double> r) {
    auto t1 = tangent_dir(q, p);
    auto t2 = tangent_dir(q, r);
    return std::acos(std::clamp(t1[0] * t2[0] + t1[1] * t2[1], -1.0, 1.0));
}

bool point_in_convex_polygon(std::span<const double> x,
                             const std::vector<std::vector<double>>& poly, double tol) {
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const auto& a = poly[i];
        const auto& b = poly[(i + 1) % m];
        double cr = (b[0] - a[0]) * (x[1] - a[1]) - (b[1] - a[1]) * (x[0] - a[0]);
        if (cr < -tol) return false;
    }
    return true;
}

}  // namespace testsupport
