#include "ballbodies/planar_checks.hpp"

#include <cmath>
#include <stdexcept>

namespace bb {

SymmetralCheck check_symmetral_2d(const PointConfig& q, int directions) {
    if (q.dim != 2) throw std::invalid_argument("check_symmetral_2d: dim must be 2");
    ArcPolygon qr = disk_intersection(q);
    if (qr.kind == RegionKind::empty || qr.kind == RegionKind::single_point)
        throw std::invalid_argument("check_symmetral_2d: Q^r must be proper");

    // midpoint set (p_i - p_j)/2 over all ordered pairs; i = j contributes o
    std::vector<Vec> mids;
    mids.push_back(Vec{0.0, 0.0});
    for (const Vec& a : q.points)
        for (const Vec& b : q.points) mids.push_back(0.5 * (a - b));
    ArcPolygon sym = disk_intersection(PointConfig(2, q.radius, mids));

    SymmetralCheck out;
    out.directions = directions;
    for (int k = 0; k < directions; ++k) {
        const double t = 2.0 * M_PI * k / directions;
        const Vec u{std::cos(t), std::sin(t)};
        const Vec mu{-u[0], -u[1]};
        const double expected = 0.5 * (support_2d(qr, u).value + support_2d(qr, mu).value);
        const double got = support_2d(sym, u).value;
        out.max_deviation = std::max(out.max_deviation, std::fabs(got - expected));
    }
    return out;
}

MinkowskiCheck check_minkowski_identity_2d(const PointConfig& p, int directions) {
    if (p.dim != 2) throw std::invalid_argument("check_minkowski_identity_2d: dim must be 2");
    ArcPolygon poly = disk_intersection(p);
    if (poly.kind == RegionKind::empty)
        throw std::invalid_argument("check_minkowski_identity_2d: P^r is empty");
    ArcPolygon hull = ball_hull_2d(p);

    MinkowskiCheck out;
    out.directions = directions;
    // the difference body conv_r P + (-P^r) is translation invariant, so the
    // identity needs no centering term
    for (int k = 0; k < directions; ++k) {
        const double t = 2.0 * M_PI * k / directions;
        const Vec u{std::cos(t), std::sin(t)};
        const Vec mu{-u[0], -u[1]};
        const double sum = support_2d(hull, u).value + support_2d(poly, mu).value;
        out.max_support_deviation = std::max(out.max_support_deviation, std::fabs(sum - p.radius));
    }
    out.perimeter_sum = perimeter(hull) + perimeter(poly);
    out.perimeter_target = 2.0 * M_PI * p.radius;
    return out;
}

}  // namespace bb
