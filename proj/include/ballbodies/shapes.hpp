#pragma once

#include <functional>

#include "ballbodies/geometry.hpp"
#include "ballbodies/unit_ball.hpp"

namespace bb {

// r-lense with inradius rho: intersection of two radius-r balls whose centers
// sit at +-(r - rho) on the axis. rho = r degenerates to the full ball.
struct LensSpec {
    int dim;
    double r;
    double rho;

    LensSpec(int d, double r_, double rho_) : dim(d), r(r_), rho(rho_) {
        if (d < 2) throw std::invalid_argument("LensSpec: dim must be >= 2");
        if (!(r > 0.0) || !(rho > 0.0) || rho > r + 1e-12)
            throw std::invalid_argument("LensSpec: need 0 < rho <= r");
        rho = std::min(rho, r);
    }

    double center_offset() const { return r - rho; }              // a
    double circumradius() const {
        const double a = center_offset();
        return std::sqrt(std::max(0.0, r * r - a * a));
    }
    double inradius() const { return rho; }

    // support function in terms of the angle to the axis; the body is
    // symmetric under reflection through the midplane, hence |cos phi|
    double support(double phi) const {
        const double a = center_offset();
        const double c = std::fabs(std::cos(phi));
        if (c >= a / r) return r - a * c;
        return circumradius() * std::sin(phi);
    }
};

// r-spindle with circumradius lambda: r-ball hull of the two points at
// +-lambda on the axis. lambda = r degenerates to the full ball.
struct SpindleSpec {
    int dim;
    double r;
    double lambda;

    SpindleSpec(int d, double r_, double lambda_) : dim(d), r(r_), lambda(lambda_) {
        if (d < 2) throw std::invalid_argument("SpindleSpec: dim must be >= 2");
        if (!(r > 0.0) || !(lambda > 0.0) || lambda > r + 1e-12)
            throw std::invalid_argument("SpindleSpec: need 0 < lambda <= r");
        lambda = std::min(lambda, r);
    }

    double half_gap() const {
        return std::sqrt(std::max(0.0, r * r - lambda * lambda));  // s
    }
    double inradius() const { return r - half_gap(); }
    double circumradius() const { return lambda; }

    double support(double phi) const {
        const double c = std::fabs(std::cos(phi));
        if (c <= lambda / r) return r - half_gap() * std::sin(phi);
        return lambda * c;
    }
};

// Volume of the spherical cap of height h of B^d[o, R]; h = 2R gives the ball.
double cap_volume(int d, double R, double h, double quad_rel = 1e-10);

// Lateral surface measure of the cap of angular radius theta on the radius-R
// sphere in E^d; theta = pi gives the full sphere measure d omega_d R^(d-1).
double cap_lateral_area(int d, double R, double theta, double quad_rel = 1e-10);

// Intrinsic volumes {V_1, V_{d-1}, V_d} of a lens / spindle. Degenerate specs
// (rho = r, lambda = r) return exact ball values.
IntrinsicProfile lens_measures(const LensSpec& spec, double quad_rel = 1e-10);
IntrinsicProfile spindle_measures(const SpindleSpec& spec, double quad_rel = 1e-10);

// Mean-width route shared by both shapes: V_1 = (d-1) Int_0^pi h(phi) sin^(d-2)phi dphi.
double intrinsic_v1_from_support(int d, const std::function<double(double)>& support,
                                 double quad_rel = 1e-10);

}  // namespace bb
