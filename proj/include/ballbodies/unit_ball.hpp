#pragma once

#include <map>
#include <string>

#include "ballbodies/geometry.hpp"

namespace bb {

// Volume of the d-dimensional unit ball, pi^(d/2) / Gamma(1 + d/2).
double unit_ball_volume(int d);

// Surface measure of the unit sphere S^(d-1) in E^d, i.e. d * omega_d.
double sphere_surface(int d);

// k-th intrinsic volume of the unit ball: C(d,k) * omega_d / omega_{d-k}.
double intrinsic_ball_constant(int d, int k);

// How a profile entry was obtained.
enum class Provenance { exact, quadrature, monte_carlo };

struct ProfileEntry {
    double value = 0.0;
    Provenance provenance = Provenance::exact;
    double stderr_ = 0.0;  // only meaningful for monte_carlo entries
};

// Intrinsic volumes of one body, keyed by index k. General bodies carry
// k in {1, d-1, d}; the ball profile is complete.
struct IntrinsicProfile {
    int dim = 0;
    std::map<int, ProfileEntry> values;

    double at(int k) const {
        auto it = values.find(k);
        if (it == values.end()) throw std::out_of_range("IntrinsicProfile: missing index");
        return it->second.value;
    }
    bool has(int k) const { return values.count(k) != 0; }
};

// Complete profile of the ball of radius R: V_k = C(d,k) omega_d / omega_{d-k} R^k.
IntrinsicProfile ball_profile(int d, double R);

// Volume of profile + eps * unit ball, with the i = 0 term included so that
// inflating a point by eps returns the ball volume. Requires V_1..V_d.
double steiner_eval(const IntrinsicProfile& profile, double eps);

}  // namespace bb
