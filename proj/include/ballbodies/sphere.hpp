#pragma once

#include <cstdint>
#include <vector>

#include "ballbodies/geometry.hpp"
#include "ballbodies/highd.hpp"

namespace bb {

// Finite configuration on the unit sphere S^d (points live in E^{d+1})
// together with the neighbourhood radius epsilon.
struct SphericalConfig {
    int sphere_dim = 0;  // d; ambient dimension is d + 1
    double epsilon = 0.0;
    std::vector<Vec> points;

    void validate() const;
};

// Spherical measure of a geodesic cap of angular radius eps on S^d;
// eps = pi/2 gives half of (d+1) omega_{d+1}.
double spherical_cap_measure(int d, double eps, double quad_rel = 1e-12);

double sphere_total_measure(int d);  // (d+1) omega_{d+1}

// Does X avoid every open hemisphere? Equivalent to o in conv(X); decided by
// the distance from o to the hull (minimum-norm point). delta > tol yields a
// witness hemisphere center; delta ~ 0 yields convex coefficients for o.
struct HemisphereResult {
    bool hemisphere_free = false;
    bool borderline = false;
    double delta = 0.0;              // distance from o to conv(X)
    Vec witness;                     // hemisphere center when not free
    std::vector<double> coefficients;
};

HemisphereResult hemisphere_free(const SphericalConfig& config, double tol = 1e-9);

// MC measure of the epsilon-neighbourhood union of caps around the points.
Estimate mc_neighborhood_measure(const SphericalConfig& config, uint64_t samples, uint64_t seed);

// Per-site spherical Voronoi densities: the fraction of each cell within
// geodesic distance epsilon of its site, compared against cap/halfsphere.
struct VoronoiSite {
    Estimate cell_measure;
    Estimate cap_in_cell;
    double density = 0.0;        // cap_in_cell / cell
    double target = 0.0;         // cap(eps) / halfsphere
    double margin = 0.0;         // density - target
    double margin_stderr = 0.0;
    uint64_t cell_samples = 0;
};

std::vector<VoronoiSite> mc_voronoi_density(const SphericalConfig& config, uint64_t samples,
                                            uint64_t seed);

double geodesic_distance(const Vec& a, const Vec& b);

}  // namespace bb
