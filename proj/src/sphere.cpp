#include "ballbodies/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ballbodies/minnorm.hpp"
#include "ballbodies/quadrature.hpp"
#include "ballbodies/rng.hpp"
#include "ballbodies/unit_ball.hpp"

namespace bb {

void SphericalConfig::validate() const {
    if (sphere_dim < 1 || sphere_dim + 1 > kMaxDim)
        throw std::invalid_argument("SphericalConfig: bad sphere dimension");
    if (!(epsilon > 0.0) || epsilon > M_PI / 2.0 + 1e-12)
        throw std::invalid_argument("SphericalConfig: epsilon must lie in (0, pi/2]");
    if (points.empty()) throw std::invalid_argument("SphericalConfig: needs at least one point");
    for (const Vec& p : points) {
        if (p.dim() != sphere_dim + 1)
            throw std::invalid_argument("SphericalConfig: ambient dimension mismatch");
        if (std::fabs(norm(p) - 1.0) > 1e-12)
            throw std::invalid_argument("SphericalConfig: points must be unit vectors");
    }
}

double geodesic_distance(const Vec& a, const Vec& b) {
    return std::acos(std::clamp(dot(a, b), -1.0, 1.0));
}

double spherical_cap_measure(int d, double eps, double quad_rel) {
    if (d < 1) throw std::invalid_argument("spherical_cap_measure: bad dimension");
    if (eps < -1e-12 || eps > M_PI + 1e-12)
        throw std::invalid_argument("spherical_cap_measure: eps out of [0, pi]");
    eps = std::clamp(eps, 0.0, M_PI);
    if (eps == 0.0) return 0.0;
    // rim of the cap is a (d-1)-sphere of radius sin(t)
    auto f = [&](double t) { return std::pow(std::sin(t), d - 1); };
    return sphere_surface(d) * integrate(f, 0.0, eps, quad_rel);
}

double sphere_total_measure(int d) { return (d + 1) * unit_ball_volume(d + 1); }

HemisphereResult hemisphere_free(const SphericalConfig& config, double tol) {
    config.validate();
    MinNormResult mn = min_norm_point(config.points);
    HemisphereResult out;
    out.delta = mn.distance;
    out.coefficients = mn.coefficients;
    // distances that are positive but below the decision tolerance cannot be
    // trusted either way; callers resample such configurations
    out.borderline = mn.distance > 1e-13 && mn.distance <= tol;
    out.hemisphere_free = mn.distance <= tol;
    if (!out.hemisphere_free) out.witness = normalized(mn.point);
    return out;
}

Estimate mc_neighborhood_measure(const SphericalConfig& config, uint64_t samples, uint64_t seed) {
    config.validate();
    if (samples == 0) throw std::invalid_argument("mc_neighborhood_measure: need samples");
    const int n = config.sphere_dim + 1;
    const double cos_eps = std::cos(config.epsilon);

    constexpr uint64_t kBlock = 1 << 16;
    uint64_t hits = 0;
    for (uint64_t done = 0; done < samples;) {
        const uint64_t block = std::min<uint64_t>(kBlock, samples - done);
        Rng rng(seed, done / kBlock);
        for (uint64_t i = 0; i < block; ++i) {
            const Vec z = rng.unit_vec(n);
            bool in = false;
            for (const Vec& x : config.points)
                if (dot(z, x) >= cos_eps) {
                    in = true;
                    break;
                }
            hits += in;
        }
        done += block;
    }
    const double total = sphere_total_measure(config.sphere_dim);
    const double p = static_cast<double>(hits) / samples;
    Estimate e;
    e.value = total * p;
    e.stderr_ = total * std::sqrt(std::max(0.0, p * (1.0 - p)) / samples);
    e.samples = samples;
    e.seed = seed;
    e.method = "mc-neighborhood";
    return e;
}

std::vector<VoronoiSite> mc_voronoi_density(const SphericalConfig& config, uint64_t samples,
                                            uint64_t seed) {
    config.validate();
    for (size_t i = 0; i < config.points.size(); ++i)
        for (size_t j = i + 1; j < config.points.size(); ++j)
            if (dist(config.points[i], config.points[j]) <= 1e-12)
                throw std::invalid_argument("mc_voronoi_density: points must be distinct");
    HemisphereResult hf = hemisphere_free(config);
    if (!hf.hemisphere_free)
        throw std::invalid_argument("mc_voronoi_density: configuration lies in an open hemisphere");

    const int n = config.sphere_dim + 1;
    const size_t m = config.points.size();
    const double cos_eps = std::cos(config.epsilon);
    std::vector<uint64_t> cell(m, 0), cap(m, 0);

    constexpr uint64_t kBlock = 1 << 16;
    for (uint64_t done = 0; done < samples;) {
        const uint64_t block = std::min<uint64_t>(kBlock, samples - done);
        Rng rng(seed, done / kBlock);
        for (uint64_t i = 0; i < block; ++i) {
            const Vec z = rng.unit_vec(n);
            size_t best = 0;
            double bestdot = dot(z, config.points[0]);
            for (size_t j = 1; j < m; ++j) {
                const double dj = dot(z, config.points[j]);
                if (dj > bestdot) {
                    bestdot = dj;
                    best = j;
                }
            }
            ++cell[best];
            if (bestdot >= cos_eps) ++cap[best];
        }
        done += block;
    }

    const double total = sphere_total_measure(config.sphere_dim);
    const double target =
        spherical_cap_measure(config.sphere_dim, config.epsilon) / (0.5 * total);
    std::vector<VoronoiSite> out(m);
    for (size_t i = 0; i < m; ++i) {
        VoronoiSite& s = out[i];
        const double pc = static_cast<double>(cell[i]) / samples;
        s.cell_measure = {total * pc,
                          total * std::sqrt(std::max(0.0, pc * (1.0 - pc)) / samples), samples,
                          seed, "mc-voronoi-cell"};
        const double pk = static_cast<double>(cap[i]) / samples;
        s.cap_in_cell = {total * pk,
                         total * std::sqrt(std::max(0.0, pk * (1.0 - pk)) / samples), samples,
                         seed, "mc-voronoi-cap"};
        s.cell_samples = cell[i];
        const double density =
            cell[i] > 0 ? static_cast<double>(cap[i]) / static_cast<double>(cell[i]) : 0.0;
        s.density = density;
        s.target = target;
        s.margin = density - target;
        s.margin_stderr =
            cell[i] > 0 ? std::sqrt(std::max(0.0, density * (1.0 - density)) / cell[i]) : 1.0;
    }
    return out;
}

}  // namespace bb
