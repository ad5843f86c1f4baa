#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "angle_extremes/analysis.hpp"
#include "angle_extremes/euclidean.hpp"
#include "angle_extremes/rng.hpp"
#include "angle_extremes/types.hpp"
#include "support/oracles.hpp"

using namespace angle_extremes;
namespace eu = angle_extremes::euclidean;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> rot2(const std::vector<double>& p, double phi, double tx, double ty,
                         double scale) {
    double c = std::cos(phi), s = std::sin(phi);
    return {scale * (c * p[0] - s * p[1]) + tx, scale * (s * p[0] + c * p[1]) + ty};
}

Configuration random_planar(int n, std::mt19937_64& g) {
    return analysis::sample_configuration(Geometry::euclidean, n, g);
}

}  // namespace

TEST_CASE("angle_at: perpendicular axes give pi/2") {
    std::vector<double> p{1.0, 0.0}, q{0.0, 0.0}, r{0.0, 1.0};
    CHECK(eu::angle_at(p, q, r) == doctest::Approx(kPi / 2).epsilon(1e-15));
}

TEST_CASE("angle_at: equilateral triangle vertices see pi/3") {
    Configuration tri = eu::regular_ngon(3, 1.0);
    for (int v = 0; v < 3; ++v) {
        double a = eu::angle_at(tri.points[(v + 1) % 3], tri.points[v], tri.points[(v + 2) % 3]);
        CHECK(a == doctest::Approx(kPi / 3).epsilon(1e-14));
    }
}

TEST_CASE("angle_at: polar parameterization reads the angle off directly") {
    std::vector<double> p{1.0, 0.0}, q{0.0, 0.0}, r{std::cos(0.3), std::sin(0.3)};
    double a = eu::angle_at(p, q, r);
    CHECK(a == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(std::abs(a - testsupport::euclid_angle_oracle(p, q, r)) < 1e-12);
}

TEST_CASE("angle_at: coincident vertex is rejected") {
    std::vector<double> p{1.0, 0.0}, q{0.0, 0.0};
    std::vector<double> almost{0.0, 0.5e-9};
    CHECK_THROWS_AS((void)eu::angle_at(q, q, p), DegenerateVertexError);
    CHECK_THROWS_AS((void)eu::angle_at(p, q, almost), DegenerateVertexError);
}

TEST_CASE("angle_at: distinct collinear triples give 0 or pi, not an error") {
    std::vector<double> a{0.0, 0.0}, b{1.0, 0.0}, c{2.0, 0.0};
    CHECK(eu::angle_at(a, b, c) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(eu::angle_at(b, a, c) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("angle_at: exact symmetry in the outer arguments") {
    auto g = make_stream(11, 0);
    for (int it = 0; it < 200; ++it) {
        Configuration cfg = random_planar(3, g);
        double x = eu::angle_at(cfg.points[0], cfg.points[1], cfg.points[2]);
        double y = eu::angle_at(cfg.points[2], cfg.points[1], cfg.points[0]);
        CHECK(x == y);  // bitwise
    }
}

TEST_CASE("angle_at: rigid-motion and scale invariance below 1e-12") {
    auto g = make_stream(12, 0);
    for (int it = 0; it < 200; ++it) {
        Configuration cfg = random_planar(3, g);
        double base = eu::angle_at(cfg.points[0], cfg.points[1], cfg.points[2]);
        double phi = 2.0 * kPi * uniform_unit(g);
        double tx = 4.0 * uniform_unit(g) - 2.0, ty = 4.0 * uniform_unit(g) - 2.0;
        double scale = 0.25 + 4.0 * uniform_unit(g);
        double moved = eu::angle_at(rot2(cfg.points[0], phi, tx, ty, scale),
                                    rot2(cfg.points[1], phi, tx, ty, scale),
                                    rot2(cfg.points[2], phi, tx, ty, scale));
        CHECK(std::abs(moved - base) < 1e-12);
    }
}

TEST_CASE("angle_at: planar triangle angles sum to pi") {
    auto g = make_stream(13, 0);
    for (int it = 0; it < 300; ++it) {
        Configuration cfg = random_planar(3, g);
        double s = eu::angle_at(cfg.points[1], cfg.points[0], cfg.points[2]) +
                   eu::angle_at(cfg.points[0], cfg.points[1], cfg.points[2]) +
                   eu::angle_at(cfg.points[0], cfg.points[2], cfg.points[1]);
        CHECK(std::abs(s - kPi) < 1e-10);
    }
}

TEST_CASE("angle_at: d >= 3 path agrees with the law-of-cosines oracle") {
    auto g = make_stream(14, 0);
    for (int it = 0; it < 100; ++it) {
        std::vector<std::vector<double>> pts(3, std::vector<double>(4));
        for (auto& p : pts)
            for (auto& x : p) x = 2.0 * uniform_unit(g) - 1.0;
        double a = eu::angle_at(pts[0], pts[1], pts[2]);
        double o = testsupport::euclid_angle_oracle(pts[0], pts[1], pts[2]);
        CHECK(std::abs(a - o) < 1e-10);
        CHECK(a == eu::angle_at(pts[2], pts[1], pts[0]));
    }
}

TEST_CASE("convex_hull: square corners plus center") {
    Configuration cfg;
    cfg.points = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0.5, 0.5}};
    auto hull = eu::convex_hull(cfg);
    CHECK(hull.extremal_indices.size() == 4);
    CHECK(hull.interior_indices == std::vector<int>{4});
    std::set<int> ext(hull.extremal_indices.begin(), hull.extremal_indices.end());
    CHECK(ext == std::set<int>{0, 1, 2, 3});
}

TEST_CASE("convex_hull: regular 8-gon is entirely extremal") {
    Configuration cfg = eu::regular_ngon(8, 1.0);
    auto hull = eu::convex_hull(cfg);
    CHECK(hull.extremal_indices.size() == 8);
    CHECK(hull.interior_indices.empty());
}

TEST_CASE("convex_hull: counterclockwise orientation (positive signed area)") {
    auto g = make_stream(15, 0);
    for (int it = 0; it < 50; ++it) {
        Configuration cfg = random_planar(8, g);
        auto hull = eu::convex_hull(cfg);
        double area2 = 0.0;
        const auto& idx = hull.extremal_indices;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            const auto& a = cfg.points[static_cast<std::size_t>(idx[i])];
            const auto& b = cfg.points[static_cast<std::size_t>(idx[(i + 1) % idx.size()])];
            area2 += a[0] * b[1] - a[1] * b[0];
        }
        CHECK(area2 > 0.0);
    }
}

TEST_CASE("convex_hull: point inside a triangle of others is never extremal") {
    auto g = make_stream(16, 0);
    int checked = 0;
    while (checked < 40) {
        Configuration cfg = random_planar(5, g);
        // Does point 4 lie strictly inside the triangle 0,1,2?
        std::vector<std::vector<double>> tri{cfg.points[0], cfg.points[1], cfg.points[2]};
        double cr = (tri[1][0] - tri[0][0]) * (tri[2][1] - tri[0][1]) -
                    (tri[1][1] - tri[0][1]) * (tri[2][0] - tri[0][0]);
        if (cr < 0.0) std::swap(tri[1], tri[2]);
        if (!testsupport::point_in_convex_polygon(cfg.points[4], tri, -1e-9)) continue;
        ++checked;
        auto hull = eu::convex_hull(cfg);
        for (int e : hull.extremal_indices) CHECK(e != 4);
    }
}

TEST_CASE("convex_hull: collinear boundary points are not extremal") {
    Configuration cfg;
    cfg.points = {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {0, 1}};
    auto hull = eu::convex_hull(cfg);
    std::set<int> ext(hull.extremal_indices.begin(), hull.extremal_indices.end());
    CHECK(ext == std::set<int>{0, 2, 3, 4});
    CHECK(hull.interior_indices == std::vector<int>{1});
}

TEST_CASE("convex_hull: fully collinear input throws") {
    Configuration cfg;
    cfg.points = {{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    CHECK_THROWS_AS((void)eu::convex_hull(cfg), AllCollinearError);
}

TEST_CASE("convex_hull: interior points are convex combinations of the hull") {
    auto g = make_stream(17, 0);
    for (int it = 0; it < 40; ++it) {
        Configuration cfg = random_planar(12, g);
        auto hull = eu::convex_hull(cfg);
        std::vector<std::vector<double>> poly;
        for (int e : hull.extremal_indices) poly.push_back(cfg.points[static_cast<std::size_t>(e)]);
        for (int i : hull.interior_indices) {
            CHECK(testsupport::point_in_convex_polygon(cfg.points[static_cast<std::size_t>(i)],
                                                       poly, 1e-9));
        }
    }
}

TEST_CASE("regular_ngon: square attains pi/4") {
    Configuration sq = eu::regular_ngon(4, 1.0);
    CHECK(std::abs(analysis::min_angle(sq).min_angle - kPi / 4) < 1e-12);
}

TEST_CASE("regular_ngon: equilateral triangle has every angle pi/3") {
    Configuration tri = eu::regular_ngon(3, 1.0);
    for (double a : analysis::collect_triple_angles(tri)) {
        CHECK(a == doctest::Approx(kPi / 3).epsilon(1e-14));
    }
}

TEST_CASE("regular_ngon: n=12 r=2 minimum matches the brute-force oracle") {
    Configuration c = eu::regular_ngon(12, 2.0);
    double mine = analysis::min_angle(c).min_angle;
    double oracle = testsupport::euclid_min_angle_oracle(c.points);
    CHECK(std::abs(mine - kPi / 12) < 1e-12);
    CHECK(std::abs(oracle - kPi / 12) < 1e-10);  // oracle path is less stable, wider net
    CHECK(analysis::min_angle(c).total_triples_scanned == 660);
}

TEST_CASE("regular_ngon: rejects bad parameters") {
    CHECK_THROWS_AS((void)eu::regular_ngon(2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)eu::regular_ngon(5, 0.0), std::invalid_argument);
}

TEST_CASE("regular_simplex: equilateral triangle at d=2") {
    Configuration c = eu::regular_simplex(2);
    REQUIRE(c.size() == 3);
    for (double a : analysis::collect_triple_angles(c)) {
        CHECK(std::abs(a - kPi / 3) < 1e-12);
    }
}

TEST_CASE("regular_simplex: tetrahedron, all 12 triple angles pi/3") {
    Configuration c = eu::regular_simplex(3);
    REQUIRE(c.size() == 4);
    auto angles = analysis::collect_triple_angles(c);
    CHECK(angles.size() == 12);
    for (double a : angles) CHECK(std::abs(a - kPi / 3) < 1e-12);
}

TEST_CASE("regular_simplex: d=5 gives six points at alpha_min pi/3") {
    Configuration c = eu::regular_simplex(5);
    REQUIRE(c.size() == 6);
    CHECK(std::abs(analysis::min_angle(c).min_angle - kPi / 3) < 1e-12);
}

TEST_CASE("regular_simplex: pairwise equidistant and centered") {
    for (int d = 2; d <= 6; ++d) {
        Configuration c = eu::regular_simplex(d);
        double ref = eu::distance(c.points[0], c.points[1]);
        for (int i = 0; i < c.size(); ++i)
            for (int j = i + 1; j < c.size(); ++j) {
                CHECK(std::abs(eu::distance(c.points[static_cast<std::size_t>(i)],
                                            c.points[static_cast<std::size_t>(j)]) -
                               ref) < 1e-12);
            }
        for (int k = 0; k < d; ++k) {
            double s = 0.0;
            for (const auto& p : c.points) s += p[static_cast<std::size_t>(k)];
            CHECK(std::abs(s) < 1e-12);
        }
    }
}
