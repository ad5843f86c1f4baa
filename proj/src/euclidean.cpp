#include "angle_extremes/euclidean.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace angle_extremes::euclidean {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double distance(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double angle_at(std::span<const double> p, std::span<const double> q, std::span<const double> r) {
    const std::size_t d = q.size();
    if (p.size() != d || r.size() != d) {
        throw std::invalid_argument("angle_at: mixed dimensions");
    }
    double uu = 0.0, vv = 0.0, uv = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        double ui = p[i] - q[i];
        double vi = r[i] - q[i];
        uu += ui * ui;
        vv += vi * vi;
        uv += ui * vi;
    }
    double nu = std::sqrt(uu);
    double nv = std::sqrt(vv);
    if (nu < kSeparationTol || nv < kSeparationTol) {
        throw DegenerateVertexError("angle_at: vertex coincides with an endpoint");
    }
    if (d == 2) {
        double cross = (p[0] - q[0]) * (r[1] - q[1]) - (p[1] - q[1]) * (r[0] - q[0]);
        return std::atan2(std::abs(cross), uv);
    }
    return std::acos(std::clamp(uv / (nu * nv), -1.0, 1.0));
}

std::vector<int> strict_hull_indices(const std::vector<std::vector<double>>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (pts[a][0] != pts[b][0]) return pts[a][0] < pts[b][0];
        return pts[a][1] < pts[b][1];
    });

    auto cross = [&](int o, int a, int b) {
        return (pts[a][0] - pts[o][0]) * (pts[b][1] - pts[o][1]) -
               (pts[a][1] - pts[o][1]) * (pts[b][0] - pts[o][0]);
    };

    // Monotone chain; cross <= 0 pops, so collinear boundary points are
    // excluded and the hull is strict.
    std::vector<int> hull(2 * static_cast<std::size_t>(n));
    int k = 0;
    for (int idx = 0; idx < n; ++idx) {
        int i = order[static_cast<std::size_t>(idx)];
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], i) <= 0.0) --k;
        hull[k++] = i;
    }
    int lower = k + 1;
    for (int idx = n - 2; idx >= 0; --idx) {
        int i = order[static_cast<std::size_t>(idx)];
        while (k >= lower && cross(hull[k - 2], hull[k - 1], i) <= 0.0) --k;
        hull[k++] = i;
    }
    hull.resize(static_cast<std::size_t>(k > 0 ? k - 1 : 0));
    if (static_cast<int>(hull.size()) < 3) {
        throw AllCollinearError("convex_hull: all points lie on one line");
    }
    return hull;
}

ConvexHull convex_hull(const Configuration& config) {
    if (config.size() < 3) throw std::invalid_argument("convex_hull: need n >= 3");
    if (config.dim != 2) throw std::invalid_argument("convex_hull: planar only");
    ConvexHull out;
    out.extremal_indices = strict_hull_indices(config.points);
    std::vector<char> on_hull(config.points.size(), 0);
    for (int i : out.extremal_indices) on_hull[static_cast<std::size_t>(i)] = 1;
    for (int i = 0; i < config.size(); ++i) {
        if (!on_hull[static_cast<std::size_t>(i)]) out.interior_indices.push_back(i);
    }
    return out;
}

Configuration regular_ngon(int n, double circumradius) {
    if (n < 3) throw std::invalid_argument("regular_ngon: need n >= 3");
    if (!(circumradius > 0.0)) throw std::invalid_argument("regular_ngon: need circumradius > 0");
    Configuration c;
    c.geometry = Geometry::euclidean;
    c.dim = 2;
    c.points.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double t = 2.0 * std::numbers::pi * k / n;
        c.points.push_back({circumradius * std::cos(t), circumradius * std::sin(t)});
    }
    return c;
}

Configuration regular_simplex(int d) {
    if (d < 2) throw std::invalid_argument("regular_simplex: need d >= 2");
    // Basis vectors e_1..e_d plus a*(1,..,1) with a chosen so the extra point
    // is equidistant (sqrt 2) from each e_i; then recenter on the centroid.
    Configuration c;
    c.geometry = Geometry::euclidean;
    c.dim = d;
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < d; ++i) {
        std::vector<double> p(static_cast<std::size_t>(d), 0.0);
        p[static_cast<std::size_t>(i)] = 1.0;
        pts.push_back(std::move(p));
    }
    double a = (1.0 - std::sqrt(static_cast<double>(d) + 1.0)) / d;
    pts.emplace_back(static_cast<std::size_t>(d), a);
    std::vector<double> centroid(static_cast<std::size_t>(d), 0.0);
    for (const auto& p : pts) {
        for (int i = 0; i < d; ++i) centroid[static_cast<std::size_t>(i)] += p[static_cast<std::size_t>(i)];
    }
    for (auto& x : centroid) x /= static_cast<double>(d + 1);
    for (auto& p : pts) {
        for (int i = 0; i < d; ++i) p[static_cast<std::size_t>(i)] -= centroid[static_cast<std::size_t>(i)];
    }
    c.points = std::move(pts);
    return c;
}

}  // namespace angle_extremes::euclidean
