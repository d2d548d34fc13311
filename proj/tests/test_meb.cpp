#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ballbodies/meb.hpp"
#include "ballbodies/rng.hpp"

using namespace bb;

namespace {

// brute-force oracle: two-stage grid minimization of the farthest-distance
// function over the plane
double grid_circumradius_2d(const std::vector<Vec>& pts) {
    auto farthest = [&](double x, double y) {
        double f = 0.0;
        for (const Vec& p : pts) f = std::max(f, std::hypot(x - p[0], y - p[1]));
        return f;
    };
    double cx = 0.0, cy = 0.0, span = 2.0, best = 1e300;
    for (int stage = 0; stage < 8; ++stage) {
        double bx = cx, by = cy;
        for (int i = -20; i <= 20; ++i)
            for (int j = -20; j <= 20; ++j) {
                const double x = cx + span * i / 20.0, y = cy + span * j / 20.0;
                const double f = farthest(x, y);
                if (f < best) {
                    best = f;
                    bx = x;
                    by = y;
                }
            }
        cx = bx;
        cy = by;
        span /= 10.0;
    }
    return best;
}

// random rotation in d dims from seeded Gram-Schmidt
std::vector<Vec> random_rotation(int d, uint64_t seed) {
    Rng rng(seed);
    std::vector<Vec> cols;
    while (static_cast<int>(cols.size()) < d) {
        Vec v = rng.gaussian_vec(d);
        for (const Vec& c : cols) v -= dot(v, c) * c;
        if (norm(v) > 1e-6) cols.push_back(v * (1.0 / norm(v)));
    }
    return cols;
}

Vec rotate_point(const std::vector<Vec>& rot, const Vec& p) {
    Vec out(p.dim());
    for (int i = 0; i < p.dim(); ++i)
        for (int j = 0; j < p.dim(); ++j) out[i] += rot[i][j] * p[j];
    return out;
}

}  // namespace

TEST_CASE("two points: midpoint diameter ball") {
    std::vector<Vec> pts{Vec{0.0, 0.0}, Vec{2.0, 0.0}};
    EnclosingBall b = minimal_enclosing_ball(pts);
    CHECK(b.radius == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b.center[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b.center[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("equilateral triangle of side 1") {
    std::vector<Vec> pts{Vec{0.0, 0.0}, Vec{1.0, 0.0}, Vec{0.5, std::sqrt(3.0) / 2.0}};
    EnclosingBall b = minimal_enclosing_ball(pts);
    CHECK(b.radius == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(b.radius == doctest::Approx(grid_circumradius_2d(pts)).epsilon(1e-6));
    CHECK(certify_enclosing_ball(pts, b, 1e-9));
}

TEST_CASE("regular simplex vertices on the unit sphere") {
    // d+1 unit vectors with pairwise dot -1/d span a regular simplex with
    // circumradius exactly 1
    for (int d = 2; d <= 8; ++d) {
        // vertices sqrt((d+1)/d) (e_i - centroid) in R^{d+1} have circumradius 1
        std::vector<Vec> raw;
        for (int i = 0; i <= d; ++i) {
            Vec v(d + 1);
            for (int j = 0; j <= d; ++j) v[j] = (i == j ? 1.0 : 0.0) - 1.0 / (d + 1);
            raw.push_back(v * std::sqrt((d + 1.0) / d));
        }
        EnclosingBall b = minimal_enclosing_ball(raw, 5);
        CHECK(b.radius == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(norm(b.center) < 1e-9);
        CHECK(b.support.size() <= static_cast<size_t>(d + 2));
        CHECK(certify_enclosing_ball(raw, b, 1e-8));
    }
}

TEST_CASE("all points enclosed, support on the boundary") {
    Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = 2 + static_cast<int>(rng.below(5));
        const int n = 2 + static_cast<int>(rng.below(30));
        std::vector<Vec> pts;
        for (int i = 0; i < n; ++i) pts.push_back(rng.in_ball(d, 2.0));
        EnclosingBall b = minimal_enclosing_ball(pts, trial);
        for (const Vec& p : pts) CHECK(dist(b.center, p) <= b.radius + 1e-9);
        REQUIRE(!b.support.empty());
        for (int idx : b.support)
            CHECK(std::fabs(dist(b.center, pts[idx]) - b.radius) <= 1e-8);
        CHECK(certify_enclosing_ball(pts, b, 1e-7));
    }
}

TEST_CASE("invariance under permutation seed and rigid motion") {
    Rng rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        const int d = 2 + static_cast<int>(rng.below(4));
        const int n = 3 + static_cast<int>(rng.below(12));
        std::vector<Vec> pts;
        for (int i = 0; i < n; ++i) pts.push_back(rng.in_ball(d, 1.5));

        EnclosingBall a = minimal_enclosing_ball(pts, 1);
        EnclosingBall b = minimal_enclosing_ball(pts, 999 + trial);
        CHECK(a.radius == doctest::Approx(b.radius).epsilon(1e-11));

        auto rot = random_rotation(d, 100 + trial);
        Vec shift = rng.gaussian_vec(d);
        std::vector<Vec> moved;
        for (const Vec& p : pts) moved.push_back(rotate_point(rot, p) + shift);
        EnclosingBall c = minimal_enclosing_ball(moved, 1);
        CHECK(std::fabs(a.radius - c.radius) < 1e-9);
    }
}

TEST_CASE("duplicate and degenerate inputs") {
    std::vector<Vec> pts{Vec{1.0, 1.0}, Vec{1.0, 1.0}, Vec{1.0, 1.0}};
    EnclosingBall b = minimal_enclosing_ball(pts);
    CHECK(b.radius == doctest::Approx(0.0));
    CHECK(b.center[0] == doctest::Approx(1.0));

    std::vector<Vec> collinear{Vec{0.0, 0.0}, Vec{1.0, 0.0}, Vec{2.0, 0.0}, Vec{3.0, 0.0}};
    EnclosingBall c = minimal_enclosing_ball(collinear);
    CHECK(c.radius == doctest::Approx(1.5).epsilon(1e-12));

    CHECK_THROWS_AS(minimal_enclosing_ball({}), std::invalid_argument);
}
