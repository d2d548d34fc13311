#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ballbodies/rng.hpp"
#include "ballbodies/sphere.hpp"
#include "ballbodies/unit_ball.hpp"

using namespace bb;

namespace {

SphericalConfig make_config(int d, double eps, std::vector<Vec> pts) {
    SphericalConfig c;
    c.sphere_dim = d;
    c.epsilon = eps;
    c.points = std::move(pts);
    return c;
}

std::vector<Vec> tetrahedron_s2() {
    // regular tetrahedron vertices on S^2
    const double s = 1.0 / std::sqrt(3.0);
    return {Vec{s, s, s}, Vec{s, -s, -s}, Vec{-s, s, -s}, Vec{-s, -s, s}};
}

std::vector<Vec> octahedron_s2() {
    return {Vec{1.0, 0.0, 0.0}, Vec{-1.0, 0.0, 0.0}, Vec{0.0, 1.0, 0.0},
            Vec{0.0, -1.0, 0.0}, Vec{0.0, 0.0, 1.0}, Vec{0.0, 0.0, -1.0}};
}

}  // namespace

TEST_CASE("spherical cap measure closed forms") {
    // zone formula on S^2: 2 pi (1 - cos eps)
    for (double eps : {0.2, 0.5, 1.0, M_PI / 2.0})
        CHECK(spherical_cap_measure(2, eps) ==
              doctest::Approx(2.0 * M_PI * (1.0 - std::cos(eps))).epsilon(1e-12));
    CHECK(spherical_cap_measure(2, M_PI / 2.0) == doctest::Approx(2.0 * M_PI).epsilon(1e-12));
    // arcs on S^1
    CHECK(spherical_cap_measure(1, 0.4) == doctest::Approx(0.8).epsilon(1e-12));
    // hemisphere is half the total measure in any dimension
    for (int d = 1; d <= 6; ++d) {
        CHECK(spherical_cap_measure(d, M_PI / 2.0) ==
              doctest::Approx(0.5 * sphere_total_measure(d)).epsilon(1e-12));
        CHECK(spherical_cap_measure(d, M_PI) ==
              doctest::Approx(sphere_total_measure(d)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(spherical_cap_measure(2, 3.5), std::invalid_argument);
}

TEST_CASE("hemisphere-freeness decisions") {
    // antipodal pair: free
    auto pair = make_config(2, 0.5, {Vec{0.0, 0.0, 1.0}, Vec{0.0, 0.0, -1.0}});
    HemisphereResult hp = hemisphere_free(pair);
    CHECK(hp.hemisphere_free);
    CHECK(!hp.borderline);

    // tetrahedron: free with strictly positive coefficients
    auto tet = make_config(2, 0.5, tetrahedron_s2());
    HemisphereResult ht = hemisphere_free(tet);
    CHECK(ht.hemisphere_free);
    double sum = 0.0;
    for (double c : ht.coefficients) {
        CHECK(c >= -1e-12);
        sum += c;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));

    // cluster inside a small cap: not free, witness separates
    Rng rng(401);
    Vec center = rng.unit_vec(3);
    std::vector<Vec> cluster;
    for (int i = 0; i < 8; ++i) {
        Vec p = center + 0.3 * rng.gaussian_vec(3);
        cluster.push_back(normalized(p));
    }
    auto cl = make_config(2, 0.5, cluster);
    HemisphereResult hc = hemisphere_free(cl);
    CHECK(!hc.hemisphere_free);
    for (const Vec& x : cluster) CHECK(dot(hc.witness, x) > 0.0);
}

TEST_CASE("neighborhood measure: single point equals the cap") {
    auto single = make_config(2, 0.7, {Vec{0.0, 0.0, 1.0}});
    Estimate e = mc_neighborhood_measure(single, 400000, 17);
    const double cap = spherical_cap_measure(2, 0.7);
    CHECK(std::fabs(e.value - cap) <= 3.0 * e.stderr_);
}

TEST_CASE("neighborhood measure: antipodal pair gives two disjoint caps") {
    for (double eps : {0.4, M_PI / 2.0}) {
        auto pair = make_config(2, eps, {Vec{1.0, 0.0, 0.0}, Vec{-1.0, 0.0, 0.0}});
        Estimate e = mc_neighborhood_measure(pair, 400000, 19);
        CHECK(std::fabs(e.value - 2.0 * spherical_cap_measure(2, eps)) <= 3.0 * e.stderr_ + 1e-12);
    }
}

TEST_CASE("lemma: hemisphere-free neighborhoods dominate the antipodal pair") {
    // tetrahedron at eps = pi/3 plus random hemisphere-free configs
    auto tet = make_config(2, M_PI / 3.0, tetrahedron_s2());
    Estimate e = mc_neighborhood_measure(tet, 400000, 23);
    CHECK(e.value >= 2.0 * spherical_cap_measure(2, M_PI / 3.0) - 3.0 * e.stderr_);

    Rng rng(403);
    int tested = 0;
    for (int attempt = 0; attempt < 60 && tested < 6; ++attempt) {
        std::vector<Vec> pts;
        const int m = 3 + static_cast<int>(rng.below(6));
        for (int i = 0; i < m; ++i) pts.push_back(rng.unit_vec(3));
        auto cfg = make_config(2, 0.6, pts);
        HemisphereResult hf = hemisphere_free(cfg);
        if (!hf.hemisphere_free || hf.borderline) continue;
        ++tested;
        Estimate est = mc_neighborhood_measure(cfg, 200000, 29 + attempt);
        CHECK(est.value >= 2.0 * spherical_cap_measure(2, 0.6) - 3.0 * est.stderr_);
    }
    CHECK(tested >= 3);
}

TEST_CASE("neighborhood measure is monotone in epsilon (common seeds)") {
    auto pts = tetrahedron_s2();
    double prev = 0.0;
    for (double eps : {0.3, 0.6, 0.9, 1.2}) {
        auto cfg = make_config(2, eps, pts);
        Estimate e = mc_neighborhood_measure(cfg, 200000, 31);  // same seed: same samples
        CHECK(e.value >= prev - 1e-12);
        prev = e.value;
    }
}

TEST_CASE("rotation invariance within noise") {
    Rng rng(405);
    auto pts = tetrahedron_s2();
    // random rotation via Gram-Schmidt
    std::vector<Vec> cols;
    while (cols.size() < 3) {
        Vec v = rng.gaussian_vec(3);
        for (const Vec& c : cols) v -= dot(v, c) * c;
        if (norm(v) > 1e-6) cols.push_back(v * (1.0 / norm(v)));
    }
    std::vector<Vec> rotated;
    for (const Vec& p : pts) {
        Vec q(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) q[i] += cols[i][j] * p[j];
        rotated.push_back(normalized(q));
    }
    Estimate a = mc_neighborhood_measure(make_config(2, 0.5, pts), 300000, 37);
    Estimate b = mc_neighborhood_measure(make_config(2, 0.5, rotated), 300000, 37);
    CHECK(std::fabs(a.value - b.value) <= 3.0 * (a.stderr_ + b.stderr_));
}

TEST_CASE("voronoi density: antipodal pair sits at the equality case") {
    auto pair = make_config(2, 0.5, {Vec{0.0, 0.0, 1.0}, Vec{0.0, 0.0, -1.0}});
    auto sites = mc_voronoi_density(pair, 400000, 41);
    REQUIRE(sites.size() == 2);
    for (const auto& s : sites) {
        // each cell is a hemisphere; the density matches the target exactly
        CHECK(std::fabs(s.cell_measure.value - 0.5 * sphere_total_measure(2)) <=
              3.0 * s.cell_measure.stderr_);
        CHECK(std::fabs(s.margin) <= 3.0 * s.margin_stderr + 1e-9);
    }
}

TEST_CASE("voronoi density bound on tetrahedron and octahedron") {
    for (double eps : {0.5, 0.8}) {
        auto tet = make_config(2, eps, tetrahedron_s2());
        for (const auto& s : mc_voronoi_density(tet, 300000, 43))
            CHECK(s.margin >= -3.0 * s.margin_stderr);
        auto oct = make_config(2, eps, octahedron_s2());
        for (const auto& s : mc_voronoi_density(oct, 300000, 47))
            CHECK(s.margin >= -3.0 * s.margin_stderr);
    }
}

TEST_CASE("voronoi density rejects hypothesis violations") {
    Rng rng(407);
    Vec c = rng.unit_vec(3);
    std::vector<Vec> cluster;
    for (int i = 0; i < 4; ++i) cluster.push_back(normalized(c + 0.2 * rng.gaussian_vec(3)));
    auto cfg = make_config(2, 0.5, cluster);
    CHECK_THROWS_AS(mc_voronoi_density(cfg, 1000, 1), std::invalid_argument);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(make_config(2, 2.0, {Vec{0.0, 0.0, 1.0}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make_config(2, 0.5, {Vec{0.0, 0.0, 2.0}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make_config(2, 0.5, {Vec{0.0, 1.0}}).validate(), std::invalid_argument);
}
