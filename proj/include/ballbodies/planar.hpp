#pragma once

#include <cstdint>
#include <vector>

#include "ballbodies/geometry.hpp"

namespace bb {

enum class RegionKind { proper, full_disk, single_point, empty };

// Boundary arc of radius radii[gen] centered at generators[gen], running CCW
// from angle `start` over `span`. Arcs subtend < pi in the equal-radius form.
struct Arc {
    int gen = -1;
    double start = 0.0;
    double span = 0.0;
};

// Convex region bounded by circular arcs: the exact representation of an
// intersection of disks. vertices[i] is the start point of arcs[i]; arcs[i]
// ends at vertices[(i+1) % m]. Immutable after construction.
struct ArcPolygon {
    RegionKind kind = RegionKind::empty;
    double r = 0.0;                // common radius in the public form
    std::vector<Vec> generators;   // effective generator centers
    std::vector<double> radii;     // per-generator radius (all == r publicly)
    std::vector<Vec> vertices;
    std::vector<Arc> arcs;
    Vec point{0.0, 0.0};           // single_point location / full_disk center

    Vec arc_point(int arc_idx, double angle) const {
        const Arc& a = arcs[arc_idx];
        const Vec& c = generators[a.gen];
        const double rho = radii[a.gen];
        return Vec{c[0] + rho * std::cos(angle), c[1] + rho * std::sin(angle)};
    }
};

struct PlanarMeasures {
    double area = 0.0;
    double perimeter = 0.0;
    double inradius = 0.0;
    double circumradius = 0.0;
    Vec incenter{0.0, 0.0};
    Vec circumcenter{0.0, 0.0};
};

struct SupportPoint {
    double value = 0.0;
    Vec argmax{0.0, 0.0};
};

enum class Side { inside, boundary, outside };

// General disk list for the mixed-radius interior machinery.
struct DiskSet {
    std::vector<Vec> centers;
    std::vector<double> radii;
};

// Exact intersection of the configuration's congruent disks. Degeneracies are
// reported through `kind`: empty iff r_cr(P) > r, a single point iff
// r_cr(P) = r within tolerance, a full disk iff one effective generator.
ArcPolygon disk_intersection(const PointConfig& config, uint64_t seed = 0);

// Intersection of arbitrary disks (used for pieces of mixed radii). Same
// conventions as disk_intersection.
ArcPolygon intersect_disks(const DiskSet& disks);

// r-ball convex hull of a planar configuration via the duality
// conv_r P = V^r where V are the vertices of P^r. Empty iff r_cr(P) > r.
ArcPolygon ball_hull_2d(const PointConfig& config, uint64_t seed = 0);

// Area, perimeter, inradius (with incenter) and circumradius (with
// circumcenter). Requires kind proper or full_disk.
PlanarMeasures measures(const ArcPolygon& ap);

// Inradius by direct concave maximization of min_i (r_i - |x - c_i|) over the
// plane (certified nested ternary search); independent of the r - r_cr route.
double inradius_chebyshev(const ArcPolygon& ap, Vec* center_out = nullptr);

double area(const ArcPolygon& ap);
double perimeter(const ArcPolygon& ap);

// h(u) and a maximizer; u need not be normalized (scaled internally).
SupportPoint support_2d(const ArcPolygon& ap, const Vec& u);

Side contains_2d(const ArcPolygon& ap, const Vec& y, double eps = 1e-9);

}  // namespace bb
