#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ballbodies/geometry.hpp"
#include "ballbodies/meb.hpp"

namespace bb {

// Monte Carlo result; deterministic given (seed, samples, method).
struct Estimate {
    double value = 0.0;
    double stderr_ = 0.0;
    uint64_t samples = 0;
    uint64_t seed = 0;
    std::string method;
};

// Context for one ball intersection P^r: deduplicated generators plus the
// circumball of the generators, which certifies feasibility (r_cr <= r) and
// bounds the body by B[center, sqrt(r^2 - r_cr^2)].
class BallBody {
public:
    explicit BallBody(PointConfig config, uint64_t seed = 0);

    const PointConfig& config() const { return cfg_; }
    int dim() const { return cfg_.dim; }
    double radius() const { return cfg_.radius; }
    const EnclosingBall& circumball() const { return meb_; }
    bool feasible(double eps = 1e-9) const { return meb_.radius <= cfg_.radius + eps; }
    // radius of the sampling/outer ball sqrt(r^2 - r0^2) about the circumcenter
    double outer_radius() const;

    bool member(const Vec& y, double eps = 1e-9) const;
    double max_violation(const Vec& y) const;  // max_i (|y - p_i| - r)

    // Euclidean projection onto the body by cyclic Dykstra iterations.
    // Throws on non-convergence within max_cycles.
    Vec project(const Vec& y, double tol = 1e-10, int max_cycles = 10000) const;

    // Support h(u) with a feasible maximizer, by projected ascent. The
    // returned value is attained by the feasible point, hence a lower bound
    // on the true support within the stationarity tolerance.
    struct Support {
        double value = 0.0;
        Vec argmax;
        bool stationary = false;
    };
    Support support(const Vec& u, double tol = 1e-9) const;

private:
    PointConfig cfg_;
    EnclosingBall meb_;
};

bool member_polyhedron(const PointConfig& config, const Vec& y, double eps = 1e-9);
Vec project_polyhedron(const PointConfig& config, const Vec& y, double tol = 1e-10,
                       int max_cycles = 10000);
BallBody::Support support_polyhedron(const PointConfig& config, const Vec& u, double tol = 1e-9);

// Rejection sampling in the circumball bound; value = hit fraction * ball volume.
Estimate mc_volume_polyhedron(const PointConfig& config, uint64_t samples, uint64_t seed);

// Surface area 2 V_{d-1}: per-generator sphere sampling, summed.
Estimate mc_surface_polyhedron(const PointConfig& config, uint64_t samples, uint64_t seed);

// V_1 from the mean width over sampled directions (uses the support solver).
Estimate mean_width_polyhedron(const PointConfig& config, int directions, uint64_t seed,
                               double tol = 1e-9);

// Outer approximation of conv_r P: centers are support maximizers of P^r at
// well-spread directions, so the induced intersection of radius-r balls
// contains conv_r P by construction.
struct OuterHullApprox {
    PointConfig base;
    std::vector<Vec> directions;
    std::vector<Vec> centers;       // all lie in P^r (witnessed)
    double max_witness_violation = 0.0;

    PointConfig induced_config(int m = -1) const;  // first m centers as generators
};

OuterHullApprox hull_outer_approx(const PointConfig& config, int m, uint64_t seed,
                                  double tol = 1e-9);

// Volume estimate of the region induced by the first m centers, sampled
// inside a fixed reference ball so that estimates share random numbers
// across m (required for the stabilization protocol).
Estimate outer_hull_volume(const OuterHullApprox& approx, int m, uint64_t samples, uint64_t seed,
                           const Vec& ref_center, double ref_radius);

// Deterministic well-spread directions: equiangular (d=2), Fibonacci spiral
// (d=3), seeded Gaussian otherwise; the tail 1/4 is seeded random in all
// dimensions. Prefixes of the list are themselves reasonably spread.
std::vector<Vec> spread_directions(int dim, int count, uint64_t seed);

}  // namespace bb
