#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ballbodies/quadrature.hpp"
#include "ballbodies/rng.hpp"
#include "ballbodies/shapes.hpp"
#include "ballbodies/unit_ball.hpp"

using namespace bb;

namespace {

// circular-segment area oracle: R^2 acos((R-h)/R) - (R-h) sqrt(2Rh - h^2)
double segment_area(double R, double h) {
    return R * R * std::acos((R - h) / R) - (R - h) * std::sqrt(2.0 * R * h - h * h);
}

// classical 3D cap volume oracle: pi h^2 (R - h/3)
double cap3d(double R, double h) { return M_PI * h * h * (R - h / 3.0); }

// 3D zone area oracle: 2 pi R^2 (1 - cos theta)
double zone3d(double R, double theta) { return 2.0 * M_PI * R * R * (1.0 - std::cos(theta)); }

// two-disk intersection area, equal radii r, center distance D
double two_disk_area(double r, double D) {
    return 2.0 * r * r * std::acos(D / (2.0 * r)) - 0.5 * D * std::sqrt(4.0 * r * r - D * D);
}

}  // namespace

TEST_CASE("unit ball volumes") {
    CHECK(unit_ball_volume(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(unit_ball_volume(2) == doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-14));
    // recursion omega_d = omega_{d-2} * 2 pi / d
    for (int d = 2; d <= 30; ++d)
        CHECK(unit_ball_volume(d) ==
              doctest::Approx(unit_ball_volume(d - 2) * 2.0 * M_PI / d).epsilon(1e-13));
}

TEST_CASE("intrinsic ball constants") {
    CHECK(intrinsic_ball_constant(3, 3) == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-14));
    CHECK(intrinsic_ball_constant(2, 1) == doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(intrinsic_ball_constant(3, 1) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(intrinsic_ball_constant(5, 0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(intrinsic_ball_constant(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(intrinsic_ball_constant(3, -1), std::invalid_argument);
}

TEST_CASE("steiner formula on balls and points") {
    for (int d = 1; d <= 8; ++d) {
        for (double rad : {0.5, 1.0, 2.5}) {
            IntrinsicProfile p = ball_profile(d, rad);
            for (double eps : {0.1, 1.0, 3.0}) {
                const double expect = unit_ball_volume(d) * std::pow(rad + eps, d);
                CHECK(steiner_eval(p, eps) == doctest::Approx(expect).epsilon(1e-12));
            }
            CHECK(steiner_eval(p, 0.0) ==
                  doctest::Approx(unit_ball_volume(d) * std::pow(rad, d)).epsilon(1e-13));
        }
        // a point inflated by 1 is the unit ball
        IntrinsicProfile point;
        point.dim = d;
        for (int k = 0; k <= d; ++k) point.values[k] = {k == 0 ? 1.0 : 0.0, Provenance::exact, 0.0};
        CHECK(steiner_eval(point, 1.0) == doctest::Approx(unit_ball_volume(d)).epsilon(1e-13));
    }
}

TEST_CASE("quadrature sanity") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 3.0) ==
          doctest::Approx(9.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0) ==
          doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
}

TEST_CASE("cap volume against closed forms") {
    CHECK(cap_volume(2, 2.0, 1.0) == doctest::Approx(segment_area(2.0, 1.0)).epsilon(1e-10));
    CHECK(cap_volume(2, 2.0, 1.0) ==
          doctest::Approx(4.0 * M_PI / 3.0 - std::sqrt(3.0)).epsilon(1e-10));
    CHECK(cap_volume(3, 1.0, 0.5) == doctest::Approx(cap3d(1.0, 0.5)).epsilon(1e-10));
    CHECK(cap_volume(3, 1.0, 0.5) == doctest::Approx(5.0 * M_PI / 24.0).epsilon(1e-10));
    for (int d = 2; d <= 6; ++d) {
        CHECK(cap_volume(d, 1.5, 1.5) ==
              doctest::Approx(0.5 * unit_ball_volume(d) * std::pow(1.5, d)).epsilon(1e-10));
        CHECK(cap_volume(d, 1.5, 3.0) ==
              doctest::Approx(unit_ball_volume(d) * std::pow(1.5, d)).epsilon(1e-12));
        CHECK(cap_volume(d, 2.0, 0.0) == doctest::Approx(0.0));
    }
    CHECK_THROWS_AS(cap_volume(3, 1.0, 2.5), std::invalid_argument);
    CHECK_THROWS_AS(cap_volume(3, 1.0, -0.1), std::invalid_argument);
}

TEST_CASE("cap volume is nondecreasing in height") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 2 + static_cast<int>(rng.below(4));
        const double R = rng.uniform(0.5, 3.0);
        double h1 = rng.uniform(0.0, 2.0 * R);
        double h2 = rng.uniform(0.0, 2.0 * R);
        if (h1 > h2) std::swap(h1, h2);
        CHECK(cap_volume(d, R, h1) <= cap_volume(d, R, h2) + 1e-11);
    }
}

TEST_CASE("cap lateral area against closed forms") {
    CHECK(cap_lateral_area(3, 1.0, M_PI / 2.0) == doctest::Approx(2.0 * M_PI).epsilon(1e-10));
    CHECK(cap_lateral_area(2, 1.0, 0.7) == doctest::Approx(1.4).epsilon(1e-10));
    CHECK(cap_lateral_area(3, 2.0, M_PI / 3.0) ==
          doctest::Approx(zone3d(2.0, M_PI / 3.0)).epsilon(1e-10));
    CHECK(cap_lateral_area(3, 2.0, M_PI / 3.0) == doctest::Approx(4.0 * M_PI).epsilon(1e-10));
    for (int d = 2; d <= 6; ++d)
        CHECK(cap_lateral_area(d, 1.3, M_PI) ==
              doctest::Approx(sphere_surface(d) * std::pow(1.3, d - 1)).epsilon(1e-10));
    CHECK_THROWS_AS(cap_lateral_area(3, 1.0, 3.5), std::invalid_argument);
}

TEST_CASE("lens measures") {
    // degenerate lens is the ball
    for (int d = 2; d <= 5; ++d) {
        IntrinsicProfile p = lens_measures(LensSpec(d, 1.5, 1.5));
        CHECK(p.at(d) == doctest::Approx(unit_ball_volume(d) * std::pow(1.5, d)).epsilon(1e-12));
        CHECK(p.at(1) == doctest::Approx(intrinsic_ball_constant(d, 1) * 1.5).epsilon(1e-12));
    }
    // planar lens: twice the segment oracle
    IntrinsicProfile lens2 = lens_measures(LensSpec(2, 2.0, 1.0));
    CHECK(lens2.at(2) == doctest::Approx(2.0 * segment_area(2.0, 1.0)).epsilon(1e-10));
    // d = 2: V_1 is half the perimeter 4 r acos(a/r)
    CHECK(lens2.at(1) == doctest::Approx(2.0 * 2.0 * std::acos(0.5)).epsilon(1e-10));
    // 3D lens against the cap oracle
    IntrinsicProfile lens3 = lens_measures(LensSpec(3, 1.0, 0.5));
    CHECK(lens3.at(3) == doctest::Approx(2.0 * cap3d(1.0, 0.5)).epsilon(1e-10));
    CHECK(lens3.at(3) == doctest::Approx(5.0 * M_PI / 12.0).epsilon(1e-10));
    // surface = two lateral caps
    const double a = 0.5;  // r - rho
    CHECK(lens3.at(2) ==
          doctest::Approx(cap_lateral_area(3, 1.0, std::acos(a / 1.0))).epsilon(1e-10));
}

TEST_CASE("lens support branches join continuously") {
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + static_cast<int>(rng.below(4));
        const double r = rng.uniform(0.5, 3.0);
        const double rho = rng.uniform(0.05, 1.0) * r;
        LensSpec spec(d, r, rho);
        const double a = spec.center_offset();
        const double phi = std::acos(a / r);
        const double inner = r - a * std::cos(phi);
        const double outer = spec.circumradius() * std::sin(phi);
        CHECK(inner == doctest::Approx((r * r - a * a) / r).epsilon(1e-12));
        CHECK(std::fabs(inner - outer) < 1e-12 * std::max(1.0, r));
    }
}

TEST_CASE("spindle measures") {
    for (int d = 2; d <= 5; ++d) {
        IntrinsicProfile p = spindle_measures(SpindleSpec(d, 2.0, 2.0));
        CHECK(p.at(d) == doctest::Approx(unit_ball_volume(d) * std::pow(2.0, d)).epsilon(1e-12));
    }
    // planar spindle r=2, lambda=1: intersection of two disks at distance 2 sqrt 3
    IntrinsicProfile s2 = spindle_measures(SpindleSpec(2, 2.0, 1.0));
    CHECK(s2.at(2) == doctest::Approx(two_disk_area(2.0, 2.0 * std::sqrt(3.0))).epsilon(1e-10));
    CHECK(s2.at(2) ==
          doctest::Approx(4.0 * M_PI / 3.0 - 2.0 * std::sqrt(3.0)).epsilon(1e-10));
    // perimeter 4 r asin(lambda / r) -> V_1 = 2 r asin(lambda / r)
    CHECK(s2.at(1) == doctest::Approx(2.0 * 2.0 * std::asin(0.5)).epsilon(1e-10));
    // paper identity: inradius r - sqrt(r^2 - lambda^2)
    SpindleSpec spec(2, 2.0, 1.0);
    CHECK(spec.inradius() == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("spindle support branches join continuously") {
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + static_cast<int>(rng.below(4));
        const double r = rng.uniform(0.5, 3.0);
        const double lam = rng.uniform(0.05, 1.0) * r;
        SpindleSpec spec(d, r, lam);
        const double phi = std::acos(lam / r);
        const double tip = lam * std::cos(phi);
        const double side = r - spec.half_gap() * std::sin(phi);
        CHECK(tip == doctest::Approx(lam * lam / r).epsilon(1e-12));
        CHECK(std::fabs(tip - side) < 1e-12 * std::max(1.0, r));
    }
}

TEST_CASE("lens and spindle volumes are monotone in their parameter") {
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 2 + static_cast<int>(rng.below(3));
        const double r = rng.uniform(0.8, 2.5);
        double a = rng.uniform(0.05, 1.0) * r;
        double b = rng.uniform(0.05, 1.0) * r;
        if (a > b) std::swap(a, b);
        CHECK(lens_measures(LensSpec(d, r, a)).at(d) <=
              lens_measures(LensSpec(d, r, b)).at(d) + 1e-10);
        CHECK(spindle_measures(SpindleSpec(d, r, a)).at(d) <=
              spindle_measures(SpindleSpec(d, r, b)).at(d) + 1e-10);
    }
}

TEST_CASE("lens invariants: inradius + offset = r, circumradius formula") {
    LensSpec spec(3, 2.0, 0.75);
    CHECK(spec.inradius() + spec.center_offset() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(spec.circumradius() ==
          doctest::Approx(std::sqrt(2.0 * 2.0 - 1.25 * 1.25)).epsilon(1e-15));
}
