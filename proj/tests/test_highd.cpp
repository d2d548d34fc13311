#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ballbodies/highd.hpp"
#include "ballbodies/planar.hpp"
#include "ballbodies/rng.hpp"
#include "ballbodies/shapes.hpp"
#include "ballbodies/unit_ball.hpp"

using namespace bb;

namespace {

PointConfig random_config(Rng& rng, int dim, int n, double ratio) {
    std::vector<Vec> pts;
    EnclosingBall meb;
    do {
        pts.clear();
        for (int i = 0; i < n; ++i) pts.push_back(rng.in_ball(dim, 1.0));
        meb = minimal_enclosing_ball(pts);
    } while (meb.radius < 1e-3);
    for (Vec& p : pts) p = (p - meb.center) * (1.0 / meb.radius);
    return PointConfig(dim, ratio, std::move(pts));
}

// lens configuration in d dims: two generators at +-r0 e1
PointConfig lens_config(int d, double r, double r0) {
    Vec a = unit_axis(d, 0) * r0;
    return PointConfig(d, r, {a * -1.0, a});
}

bool within(double x, double target, double k_sigma, double sigma, double floor_ = 1e-9) {
    return std::fabs(x - target) <= k_sigma * sigma + floor_;
}

}  // namespace

TEST_CASE("membership") {
    PointConfig cfg = lens_config(3, 1.5, 1.0);
    CHECK(member_polyhedron(cfg, Vec{0.0, 0.0, 0.0}));          // circumcenter
    CHECK(member_polyhedron(cfg, cfg.points[0]) == false);      // diam > r: generators outside
    CHECK(member_polyhedron(cfg, Vec{0.0, 0.0, 10.0}) == false);
    PointConfig tight = lens_config(3, 2.5, 1.0);
    CHECK(member_polyhedron(tight, tight.points[0]));  // diam <= r: generators inside
    CHECK_THROWS_AS(member_polyhedron(cfg, Vec{0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("projection: identity, single ball, infeasible") {
    PointConfig cfg = lens_config(3, 2.0, 1.0);
    Vec inside{0.1, 0.2, -0.1};
    Vec p = project_polyhedron(cfg, inside);
    CHECK(dist(p, inside) < 1e-12);

    PointConfig single(3, 1.0, {Vec{1.0, 1.0, 1.0}});
    Vec far{1.0, 1.0, 5.0};
    Vec q = project_polyhedron(single, far);
    CHECK(q[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(q[2] == doctest::Approx(2.0).epsilon(1e-10));

    PointConfig bad(3, 1.0, {Vec{-2.0, 0.0, 0.0}, Vec{2.0, 0.0, 0.0}});
    CHECK_THROWS_AS(project_polyhedron(bad, Vec{0.0, 0.0, 0.0}), std::domain_error);
}

TEST_CASE("projection feasibility and optimality on random instances") {
    Rng rng(301);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 2 + static_cast<int>(rng.below(4));
        PointConfig cfg = random_config(rng, d, 3 + static_cast<int>(rng.below(6)),
                                        rng.uniform(1.2, 3.0));
        BallBody body(cfg);
        Vec y = rng.gaussian_vec(d) * 3.0;
        Vec p = body.project(y, 1e-11);
        CHECK(body.max_violation(p) <= 1e-9);
        // projection optimality: <y - p, z - p> <= 0 for feasible z
        for (int probe = 0; probe < 10; ++probe) {
            Vec z = body.project(rng.gaussian_vec(d), 1e-11);
            CHECK(dot(y - p, z - p) <= 1e-7);
        }
    }
}

TEST_CASE("projection onto a planar lens tip matches the planar kernel") {
    PointConfig cfg = lens_config(2, 2.0, 1.0);
    // beyond the right tip (1, 0)
    Vec y{3.0, 0.0};
    Vec p = project_polyhedron(cfg, y, 1e-11);
    CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(std::fabs(p[1]) < 1e-7);
}

TEST_CASE("support: single ball and closed-form lens") {
    PointConfig single(4, 1.5, {Vec{1.0, 0.0, 0.0, 0.0}});
    auto s = support_polyhedron(single, Vec{1.0, 0.0, 0.0, 0.0});
    CHECK(s.value == doctest::Approx(2.5).epsilon(1e-10));

    PointConfig cfg = lens_config(3, 2.0, 1.0);
    auto tip = support_polyhedron(cfg, Vec{1.0, 0.0, 0.0});
    CHECK(tip.value == doctest::Approx(1.0).epsilon(1e-7));  // r - a = 2 - 1
    auto rim = support_polyhedron(cfg, Vec{0.0, 1.0, 0.0});
    CHECK(rim.value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-7));
}

TEST_CASE("support agrees with the planar kernel") {
    Rng rng(303);
    for (int trial = 0; trial < 10; ++trial) {
        PointConfig cfg = random_config(rng, 2, 3 + static_cast<int>(rng.below(6)),
                                        rng.uniform(1.2, 3.0));
        ArcPolygon ap = disk_intersection(cfg);
        BallBody body(cfg);
        for (int k = 0; k < 12; ++k) {
            const double t = 2.0 * M_PI * k / 12.0;
            const Vec u{std::cos(t), std::sin(t)};
            const double exact = support_2d(ap, u).value;
            const double numeric = body.support(u).value;
            CHECK(numeric == doctest::Approx(exact).epsilon(1e-6));
            CHECK(numeric <= exact + 1e-8);  // feasible value never exceeds the support
        }
    }
}

TEST_CASE("support is Lipschitz with the circumradius bound as constant") {
    Rng rng(305);
    PointConfig cfg = random_config(rng, 3, 6, 2.0);
    BallBody body(cfg);
    const double bound = body.outer_radius();
    for (int trial = 0; trial < 15; ++trial) {
        Vec u = rng.unit_vec(3);
        Vec v = rng.unit_vec(3);
        const double hu = body.support(u).value;
        const double hv = body.support(v).value;
        CHECK(std::fabs(hu - hv) <= bound * dist(u, v) + 1e-6);
    }
}

TEST_CASE("mc volume: single ball, lens vs quadrature, planar vs exact") {
    PointConfig ball(3, 1.0, {Vec{0.0, 0.0, 0.0}});
    Estimate e = mc_volume_polyhedron(ball, 1000000, 42);
    CHECK(e.value == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-12));  // hit rate 1
    CHECK(e.stderr_ == doctest::Approx(0.0));

    PointConfig lens3 = lens_config(3, 1.0, 0.5);  // a = r - rho = 0.5
    Estimate el = mc_volume_polyhedron(lens3, 400000, 7);
    const double truth = lens_measures(LensSpec(3, 1.0, 0.5)).at(3);
    CHECK(within(el.value, truth, 3.0, el.stderr_));

    Rng rng(307);
    PointConfig planar = random_config(rng, 2, 6, 2.0);
    Estimate ep = mc_volume_polyhedron(planar, 400000, 9);
    const double exact = area(disk_intersection(planar));
    CHECK(within(ep.value, exact, 3.0, ep.stderr_));
}

TEST_CASE("mc volume is deterministic in the seed") {
    Rng rng(311);
    PointConfig cfg = random_config(rng, 3, 5, 2.0);
    Estimate a = mc_volume_polyhedron(cfg, 200000, 1234);
    Estimate b = mc_volume_polyhedron(cfg, 200000, 1234);
    CHECK(a.value == b.value);
    CHECK(a.stderr_ == b.stderr_);
    Estimate c = mc_volume_polyhedron(cfg, 200000, 1235);
    CHECK(a.value != c.value);
}

TEST_CASE("mc surface: ball, lens caps, planar perimeter") {
    PointConfig ball(3, 2.0, {Vec{0.0, 0.0, 0.0}});
    Estimate e = mc_surface_polyhedron(ball, 200000, 5);
    CHECK(e.value == doctest::Approx(16.0 * M_PI).epsilon(1e-12));

    PointConfig lens3 = lens_config(3, 1.0, 0.5);
    Estimate el = mc_surface_polyhedron(lens3, 400000, 6);
    const double truth = 2.0 * cap_lateral_area(3, 1.0, std::acos(0.5));
    CHECK(within(el.value, truth, 3.0, el.stderr_));

    Rng rng(313);
    PointConfig planar = random_config(rng, 2, 6, 2.0);
    Estimate ep = mc_surface_polyhedron(planar, 400000, 8);
    const double exact = perimeter(disk_intersection(planar));
    CHECK(within(ep.value, exact, 3.0, ep.stderr_));
}

TEST_CASE("mean width estimator") {
    PointConfig ball(3, 1.5, {Vec{0.0, 0.0, 0.0}});
    Estimate e = mean_width_polyhedron(ball, 64, 3);
    CHECK(e.value == doctest::Approx(intrinsic_ball_constant(3, 1) * 1.5).epsilon(1e-6));

    PointConfig lens3 = lens_config(3, 1.0, 0.5);
    Estimate el = mean_width_polyhedron(lens3, 256, 11);
    const double truth = lens_measures(LensSpec(3, 1.0, 0.5)).at(1);
    CHECK(within(el.value, truth, 3.0, el.stderr_, 1e-5));

    Rng rng(317);
    PointConfig planar = random_config(rng, 2, 5, 2.0);
    Estimate ep = mean_width_polyhedron(planar, 256, 13);
    const double exact = 0.5 * perimeter(disk_intersection(planar));
    CHECK(within(ep.value, exact, 3.0, ep.stderr_, 1e-5));
}

TEST_CASE("adding a generator never increases the volume (common random numbers)") {
    Rng rng(331);
    for (int trial = 0; trial < 8; ++trial) {
        const int d = 2 + static_cast<int>(rng.below(2));
        PointConfig small = random_config(rng, d, 4, 2.0);
        PointConfig big = small;
        big.points.push_back(rng.in_ball(d, 0.9));
        // same seed: paired comparison
        Estimate a = mc_volume_polyhedron(small, 100000, 555);
        Estimate b = mc_volume_polyhedron(big, 100000, 555);
        CHECK(b.value <= a.value + 3.0 * (a.stderr_ + b.stderr_));
    }
}

TEST_CASE("outer hull approximation of a two-point planar config") {
    PointConfig cfg = lens_config(2, 2.0, 1.0);
    OuterHullApprox approx = hull_outer_approx(cfg, 16, 77);
    CHECK(approx.max_witness_violation <= 1e-9);

    // every center lies in P^r
    BallBody body(cfg);
    for (const Vec& c : approx.centers) CHECK(body.max_violation(c) <= 1e-9);

    // the equiangular base contains (0, +-1), whose argmax are the lens
    // vertices, so the induced region equals the spindle exactly
    ArcPolygon induced = disk_intersection(approx.induced_config());
    REQUIRE(induced.kind == RegionKind::proper);
    const double spindle_area = spindle_measures(SpindleSpec(2, 2.0, 1.0)).at(2);
    CHECK(area(induced) == doctest::Approx(spindle_area).epsilon(1e-5));
}

TEST_CASE("outer hull volume decreases with more centers and bounds the hull") {
    Rng rng(337);
    PointConfig cfg = random_config(rng, 3, 5, 2.0);
    OuterHullApprox approx = hull_outer_approx(cfg, 256, 21);

    EnclosingBall ref = minimal_enclosing_ball(approx.induced_config(32).points);
    const double ref_r =
        std::sqrt(std::max(0.0, cfg.radius * cfg.radius - ref.radius * ref.radius));

    double prev = 1e300;
    for (int m : {32, 64, 128, 256}) {
        Estimate e = outer_hull_volume(approx, m, 60000, 900, ref.center, ref_r);
        CHECK(e.value <= prev + 3.0 * e.stderr_ + 1e-9);
        prev = e.value;
    }
}

TEST_CASE("deterministic spread directions") {
    auto d2 = spread_directions(2, 16, 5);
    CHECK(d2.size() == 16);
    auto d2b = spread_directions(2, 16, 5);
    for (size_t i = 0; i < d2.size(); ++i) CHECK(dist(d2[i], d2b[i]) == 0.0);
    for (const Vec& u : d2) CHECK(norm(u) == doctest::Approx(1.0).epsilon(1e-12));
    auto d4 = spread_directions(4, 32, 5);
    for (const Vec& u : d4) CHECK(norm(u) == doctest::Approx(1.0).epsilon(1e-12));
}
