#pragma once

#include "ballbodies/planar.hpp"

namespace bb {

// Support-function verification of M_o(Q^r) = (M_o(Q))^r: the disk
// intersection over pair midpoints (p_i - p_j)/2 must have support
// (h_{Q^r}(u) + h_{Q^r}(-u)) / 2 in every direction.
struct SymmetralCheck {
    double max_deviation = 0.0;
    int directions = 0;
};

SymmetralCheck check_symmetral_2d(const PointConfig& q, int directions = 360);

// Verification of B^2[o, r] = conv_r P + (-P^r): support functions must sum
// to r in every direction, and the perimeters to 2 pi r.
struct MinkowskiCheck {
    double max_support_deviation = 0.0;
    double perimeter_sum = 0.0;
    double perimeter_target = 0.0;
    int directions = 0;
};

MinkowskiCheck check_minkowski_identity_2d(const PointConfig& p, int directions = 360);

}  // namespace bb
