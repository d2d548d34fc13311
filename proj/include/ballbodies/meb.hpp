#pragma once

#include <cstdint>
#include <vector>

#include "ballbodies/geometry.hpp"

namespace bb {

struct EnclosingBall {
    Vec center;
    double radius = 0.0;
    std::vector<int> support;  // indices of points on the boundary (<= dim+1)
};

// Smallest enclosing ball by Welzl's randomized recursion with move-to-front.
// Deterministic for a fixed seed. Works for dim <= kMaxDim.
EnclosingBall minimal_enclosing_ball(const std::vector<Vec>& points, uint64_t seed = 0);

// Independent optimality certificate: all points inside within tol, and the
// origin-translated support points contain the center in their convex hull
// (checked by a minimum-norm-point projection).
bool certify_enclosing_ball(const std::vector<Vec>& points, const EnclosingBall& ball,
                            double tol = 1e-7);

}  // namespace bb
