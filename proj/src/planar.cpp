#include "ballbodies/planar.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "ballbodies/meb.hpp"
#include "ballbodies/rng.hpp"

namespace bb {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

double wrap_pi(double a) {
    a = std::fmod(a, kTwoPi);
    if (a <= -M_PI) a += kTwoPi;
    if (a > M_PI) a -= kTwoPi;
    return a;
}

double norm_2pi(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

double angle_of(const Vec& v) { return std::atan2(v[1], v[0]); }

double coord_scale(const std::vector<Vec>& pts, double r) {
    double s = std::max(1.0, r);
    for (const Vec& p : pts) s = std::max({s, std::fabs(p[0]), std::fabs(p[1])});
    return s;
}

double cross(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<Vec> dedup_points(const std::vector<Vec>& pts, double eps) {
    std::vector<Vec> out;
    for (const Vec& p : pts) {
        bool dup = false;
        for (const Vec& q : out)
            if (dist(p, q) <= eps) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(p);
    }
    return out;
}

// Strictly extreme points of the convex hull (Andrew's monotone chain);
// collinear interior points are dropped since their disks are implied.
std::vector<Vec> hull_extreme_points(std::vector<Vec> pts, double scale) {
    if (pts.size() <= 2) return pts;
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    const double eps_area = 1e-12 * scale * scale;
    std::vector<Vec> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= eps_area) --k;
        h[k++] = pts[i];
    }
    const size_t lower = k + 1;
    for (size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= eps_area) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.empty()) h.push_back(pts.front());  // fully degenerate input
    return h;
}

struct Window {
    double start = 0.0;
    double span = 0.0;
    bool full = false;
    bool empty = false;
};

// Angular window of circle(ci, ri) lying inside disk(cj, rj).
Window circle_in_disk_window(const Vec& ci, double ri, const Vec& cj, double rj) {
    Window w;
    const double D = dist(ci, cj);
    if (D + ri <= rj) {
        w.full = true;
        return w;
    }
    if (D >= ri + rj || D + rj <= ri) {
        w.empty = true;
        return w;
    }
    const double cosb = std::clamp((D * D + ri * ri - rj * rj) / (2.0 * D * ri), -1.0, 1.0);
    const double beta = std::acos(cosb);
    w.start = angle_of(cj - ci) - beta;
    w.span = 2.0 * beta;
    if (w.span <= 0.0) w.empty = true;
    return w;
}

// Intersection of two arcs of the same circle, both subtending <= pi (+slack).
// Yields at most one interval; flags report whether either end was cut.
struct MinorOverlap {
    bool hit = false;
    double start = 0.0;
    double span = 0.0;
};

MinorOverlap intersect_minor(double is, double ispan, double ws, double wspan) {
    MinorOverlap out;
    const double off = norm_2pi(is - ws);  // interval start in window frame
    double lo = off, hi = off + ispan;
    // candidate overlap with [0, wspan], allowing the wrapped copy
    double a = std::max(lo, 0.0), b = std::min(hi, wspan);
    if (b - a <= 1e-14) {
        // wrapped part of the interval
        a = 0.0;
        b = std::min(hi - kTwoPi, wspan);
        if (b - a <= 1e-14) return out;
    }
    out.hit = true;
    out.start = ws + a;
    out.span = b - a;
    return out;
}

struct BuildArc {
    int gen;
    double start;
    double span;
};

Vec point_on(const std::vector<Vec>& gens, const std::vector<double>& radii, const BuildArc& a,
             double angle) {
    const Vec& c = gens[a.gen];
    return Vec{c[0] + radii[a.gen] * std::cos(angle), c[1] + radii[a.gen] * std::sin(angle)};
}

// One clip of an equal-radius arc chain by the disk around gens[newgen]. The
// precondition r_cr(gens) < r guarantees a nonempty interior, so the clip can
// remove boundary but never everything.
std::vector<BuildArc> clip_equal(const std::vector<BuildArc>& arcs, const std::vector<Vec>& gens,
                                 double r, int newgen, double scale) {
    const Vec& c = gens[newgen];
    std::vector<BuildArc> kept;
    kept.reserve(arcs.size() + 2);
    for (const BuildArc& a : arcs) {
        const Vec& q = gens[a.gen];
        if (dist(q, c) <= 1e-13 * scale) return arcs;  // duplicate generator
        Window w = circle_in_disk_window(q, r, c, r);
        if (w.full) {
            kept.push_back(a);
            continue;
        }
        if (w.empty) continue;
        MinorOverlap ov = intersect_minor(a.start, a.span, w.start, w.span);
        if (!ov.hit || ov.span <= 1e-14) continue;
        kept.push_back({a.gen, ov.start, ov.span});
    }
    if (kept.empty())
        throw std::runtime_error("planar: clip removed the whole boundary");

    // splice arcs of the new circle into every endpoint gap
    std::vector<BuildArc> out;
    const double merge = 1e-11 * scale;
    for (size_t i = 0; i < kept.size(); ++i) {
        const BuildArc& a = kept[i];
        const BuildArc& b = kept[(i + 1) % kept.size()];
        out.push_back(a);
        // constant radius r across gens here
        std::vector<double> rr(gens.size(), r);
        Vec pa = point_on(gens, rr, a, a.start + a.span);
        Vec pb = point_on(gens, rr, b, b.start);
        if (dist(pa, pb) > merge) {
            const double s = angle_of(pa - c);
            const double e = angle_of(pb - c);
            double span = norm_2pi(e - s);
            if (span > 1e-14) out.push_back({newgen, s, span});
        }
    }
    return out;
}

void finalize_chain(ArcPolygon& ap, const std::vector<BuildArc>& arcs) {
    ap.arcs.clear();
    ap.vertices.clear();
    for (const BuildArc& a : arcs) {
        if (a.span <= 1e-12) continue;
        ap.arcs.push_back({a.gen, a.start, a.span});
    }
    for (size_t i = 0; i < ap.arcs.size(); ++i)
        ap.vertices.push_back(ap.arc_point(static_cast<int>(i), ap.arcs[i].start));
    ap.kind = RegionKind::proper;
}

// --- generic concave/convex line searches over a box -----------------------

template <class F>
double ternary_max_1d(const F& f, double lo, double hi, double tol) {
    while (hi - lo > tol) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (f(m1) < f(m2))
            lo = m1;
        else
            hi = m2;
    }
    return 0.5 * (lo + hi);
}

struct BoxMax {
    Vec arg{0.0, 0.0};
    double value = 0.0;
};

// Maximizes a jointly concave f over [lo, hi]^2 by nested ternary search.
template <class F>
BoxMax concave_max_2d(const F& f, const Vec& lo, const Vec& hi, double tol) {
    auto inner = [&](double x) {
        return ternary_max_1d([&](double y) { return f(Vec{x, y}); }, lo[1], hi[1], tol);
    };
    auto g = [&](double x) { return f(Vec{x, inner(x)}); };
    const double xs = ternary_max_1d(g, lo[0], hi[0], tol);
    const double ys = inner(xs);
    return {Vec{xs, ys}, f(Vec{xs, ys})};
}

double slack_min(const std::vector<Vec>& cs, const std::vector<double>& rs, const Vec& x) {
    double m = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < cs.size(); ++i) m = std::min(m, rs[i] - dist(x, cs[i]));
    return m;
}

void bounding_box(const std::vector<Vec>& cs, const std::vector<double>& rs, Vec& lo, Vec& hi) {
    lo = Vec{1e300, 1e300};
    hi = Vec{-1e300, -1e300};
    for (size_t i = 0; i < cs.size(); ++i) {
        lo[0] = std::min(lo[0], cs[i][0] - rs[i]);
        lo[1] = std::min(lo[1], cs[i][1] - rs[i]);
        hi[0] = std::max(hi[0], cs[i][0] + rs[i]);
        hi[1] = std::max(hi[1], cs[i][1] + rs[i]);
    }
}

}  // namespace

ArcPolygon disk_intersection(const PointConfig& config, uint64_t seed) {
    config.validate();
    if (config.dim != 2) throw std::invalid_argument("disk_intersection: dim must be 2");
    const double r = config.radius;
    const double scale = coord_scale(config.points, r);

    std::vector<Vec> pts = dedup_points(config.points, 1e-13 * scale);
    std::vector<Vec> hull = hull_extreme_points(pts, scale);

    ArcPolygon ap;
    ap.r = r;
    ap.generators = hull;
    ap.radii.assign(hull.size(), r);

    if (hull.size() == 1) {
        ap.kind = RegionKind::full_disk;
        ap.point = hull[0];
        return ap;
    }

    EnclosingBall meb = minimal_enclosing_ball(hull, seed);
    const double eps_pt = 1e-9 * std::max(1.0, r);
    if (meb.radius > r + eps_pt) {
        ap.kind = RegionKind::empty;
        return ap;
    }
    if (meb.radius > r - eps_pt) {
        ap.kind = RegionKind::single_point;
        ap.point = meb.center;
        return ap;
    }

    // seeded processing order over the reduced generators
    std::vector<int> order(hull.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    Rng rng(seed, 0x706c616e);
    for (size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

    // start as the lens of the first two, then clip
    std::vector<BuildArc> arcs;
    {
        const Vec& c0 = hull[order[0]];
        const Vec& c1 = hull[order[1]];
        const double D = dist(c0, c1);
        const double alpha = std::acos(std::clamp(D / (2.0 * r), -1.0, 1.0));
        const double th0 = angle_of(c1 - c0);
        const double th1 = angle_of(c0 - c1);
        arcs.push_back({order[0], th0 - alpha, 2.0 * alpha});
        arcs.push_back({order[1], th1 - alpha, 2.0 * alpha});
    }
    for (size_t i = 2; i < order.size(); ++i)
        arcs = clip_equal(arcs, hull, r, order[i], scale);

    finalize_chain(ap, arcs);
    return ap;
}

ArcPolygon intersect_disks(const DiskSet& disks) {
    if (disks.centers.empty() || disks.centers.size() != disks.radii.size())
        throw std::invalid_argument("intersect_disks: bad disk list");
    const size_t n0 = disks.centers.size();
    double maxr = 0.0;
    for (double r : disks.radii) {
        if (!(r > 0.0)) throw std::invalid_argument("intersect_disks: radii must be positive");
        maxr = std::max(maxr, r);
    }
    const double scale = coord_scale(disks.centers, maxr);

    // drop duplicates and disks that contain another disk
    std::vector<Vec> cs;
    std::vector<double> rs;
    for (size_t i = 0; i < n0; ++i) {
        bool drop = false;
        for (size_t j = 0; j < n0 && !drop; ++j) {
            if (i == j) continue;
            const double D = dist(disks.centers[i], disks.centers[j]);
            if (D <= 1e-13 * scale && std::fabs(disks.radii[i] - disks.radii[j]) <= 1e-13 * scale &&
                j < i)
                drop = true;  // exact duplicate, keep first
            else if (D + disks.radii[j] <= disks.radii[i] - 1e-13 * scale)
                drop = true;  // disk i strictly contains disk j
        }
        if (!drop) {
            cs.push_back(disks.centers[i]);
            rs.push_back(disks.radii[i]);
        }
    }

    ArcPolygon ap;
    ap.r = maxr;
    ap.generators = cs;
    ap.radii = rs;

    if (cs.size() == 1) {
        ap.kind = RegionKind::full_disk;
        ap.r = rs[0];
        ap.point = cs[0];
        return ap;
    }

    // feasibility by concave maximization of the slack
    Vec lo, hi;
    bounding_box(cs, rs, lo, hi);
    BoxMax deep = concave_max_2d([&](const Vec& x) { return slack_min(cs, rs, x); }, lo, hi,
                                 1e-11 * scale);
    const double eps_pt = 1e-9 * std::max(1.0, maxr);
    if (deep.value < -eps_pt) {
        ap.kind = RegionKind::empty;
        return ap;
    }
    if (deep.value < eps_pt) {
        ap.kind = RegionKind::single_point;
        ap.point = deep.arg;
        return ap;
    }

    // boundary of circle i inside all other disks, as angular interval sets
    std::vector<BuildArc> pieces;
    for (size_t i = 0; i < cs.size(); ++i) {
        std::vector<std::pair<double, double>> set{{0.0, kTwoPi}};
        bool alive = true;
        for (size_t j = 0; j < cs.size() && alive; ++j) {
            if (i == j) continue;
            Window w = circle_in_disk_window(cs[i], rs[i], cs[j], rs[j]);
            if (w.full) continue;
            if (w.empty) {
                alive = false;
                break;
            }
            std::vector<std::pair<double, double>> next;
            for (auto [s, span] : set) {
                // intersect [s, s+span] with the window, both mod 2pi
                const double off = norm_2pi(s - w.start);
                const double lo1 = off, hi1 = off + span;
                double a = std::max(lo1, 0.0), b = std::min(hi1, w.span);
                if (b - a > 1e-14) next.push_back({w.start + a, b - a});
                if (hi1 > kTwoPi) {
                    a = 0.0;
                    b = std::min(hi1 - kTwoPi, w.span);
                    if (b - a > 1e-14) next.push_back({w.start + a, b - a});
                }
            }
            set = std::move(next);
            if (set.empty()) alive = false;
        }
        if (!alive) continue;
        if (set.size() == 1 && set[0].second >= kTwoPi - 1e-12) {
            // circle i never cut: its disk is the region
            ap.kind = RegionKind::full_disk;
            ap.generators = {cs[i]};
            ap.radii = {rs[i]};
            ap.r = rs[i];
            ap.point = cs[i];
            return ap;
        }
        for (auto [s, span] : set)
            if (span > 1e-12) pieces.push_back({static_cast<int>(i), s, span});
    }

    if (pieces.empty()) {
        ap.kind = RegionKind::single_point;  // interior collapsed numerically
        ap.point = deep.arg;
        return ap;
    }

    // stitch the pieces into one CCW cycle by endpoint matching
    const double eps_match = 1e-7 * scale;
    std::vector<bool> used(pieces.size(), false);
    std::vector<BuildArc> chain;
    chain.push_back(pieces[0]);
    used[0] = true;
    Vec pos = point_on(cs, rs, pieces[0], pieces[0].start + pieces[0].span);
    const Vec home = point_on(cs, rs, pieces[0], pieces[0].start);
    while (true) {
        int best = -1;
        double bestd = eps_match;
        for (size_t j = 0; j < pieces.size(); ++j) {
            if (used[j]) continue;
            const double dj = dist(point_on(cs, rs, pieces[j], pieces[j].start), pos);
            if (dj < bestd) {
                bestd = dj;
                best = static_cast<int>(j);
            }
        }
        if (best < 0) break;
        used[best] = true;
        chain.push_back(pieces[best]);
        pos = point_on(cs, rs, pieces[best], pieces[best].start + pieces[best].span);
    }
    if (dist(pos, home) > eps_match ||
        static_cast<size_t>(std::count(used.begin(), used.end(), true)) != pieces.size())
        throw std::runtime_error("intersect_disks: boundary stitching failed");

    finalize_chain(ap, chain);
    return ap;
}

ArcPolygon ball_hull_2d(const PointConfig& config, uint64_t seed) {
    ArcPolygon ap = disk_intersection(config, seed);
    switch (ap.kind) {
        case RegionKind::empty:
            return ap;  // conv_r P empty iff P^r empty
        case RegionKind::full_disk: {
            // single effective generator p: hull is the point p
            ArcPolygon out;
            out.kind = RegionKind::single_point;
            out.r = config.radius;
            out.point = ap.point;
            out.generators = {ap.point};
            out.radii = {config.radius};
            return out;
        }
        case RegionKind::single_point: {
            // r_cr(P) = r: the circumball is the only radius-r ball containing P
            ArcPolygon out;
            out.kind = RegionKind::full_disk;
            out.r = config.radius;
            out.point = ap.point;
            out.generators = {ap.point};
            out.radii = {config.radius};
            return out;
        }
        case RegionKind::proper:
            break;
    }
    PointConfig dual(2, config.radius, ap.vertices);
    return disk_intersection(dual, seed);
}

double area(const ArcPolygon& ap) {
    switch (ap.kind) {
        case RegionKind::empty:
            throw std::invalid_argument("area: empty region");
        case RegionKind::single_point:
            return 0.0;
        case RegionKind::full_disk:
            return M_PI * ap.r * ap.r;
        case RegionKind::proper:
            break;
    }
    double a = 0.0;
    const size_t m = ap.vertices.size();
    for (size_t i = 0; i < m; ++i) {
        const Vec& p = ap.vertices[i];
        const Vec& q = ap.vertices[(i + 1) % m];
        a += p[0] * q[1] - q[0] * p[1];
    }
    a *= 0.5;
    for (const Arc& arc : ap.arcs) {
        const double rho = ap.radii[arc.gen];
        a += 0.5 * rho * rho * (arc.span - std::sin(arc.span));
    }
    return a;
}

double perimeter(const ArcPolygon& ap) {
    switch (ap.kind) {
        case RegionKind::empty:
            throw std::invalid_argument("perimeter: empty region");
        case RegionKind::single_point:
            return 0.0;
        case RegionKind::full_disk:
            return kTwoPi * ap.r;
        case RegionKind::proper:
            break;
    }
    double len = 0.0;
    for (const Arc& arc : ap.arcs) len += ap.radii[arc.gen] * arc.span;
    return len;
}

double inradius_chebyshev(const ArcPolygon& ap, Vec* center_out) {
    if (ap.kind == RegionKind::empty) throw std::invalid_argument("inradius: empty region");
    if (ap.kind == RegionKind::single_point) {
        if (center_out) *center_out = ap.point;
        return 0.0;
    }
    double scale = std::max(1.0, ap.r);
    for (double r : ap.radii) scale = std::max(scale, r);
    Vec lo, hi;
    bounding_box(ap.generators, ap.radii, lo, hi);
    BoxMax best = concave_max_2d(
        [&](const Vec& x) { return slack_min(ap.generators, ap.radii, x); }, lo, hi,
        1e-11 * scale);
    if (center_out) *center_out = best.arg;
    return std::max(0.0, best.value);
}

PlanarMeasures measures(const ArcPolygon& ap) {
    if (ap.kind != RegionKind::proper && ap.kind != RegionKind::full_disk)
        throw std::invalid_argument("measures: region must be proper or a full disk");

    PlanarMeasures m;
    m.area = area(ap);
    m.perimeter = perimeter(ap);

    if (ap.kind == RegionKind::full_disk) {
        m.inradius = m.circumradius = ap.r;
        m.incenter = m.circumcenter = ap.point;
        return m;
    }

    bool equal_radii = true;
    for (double r : ap.radii)
        if (std::fabs(r - ap.r) > 1e-13 * std::max(1.0, ap.r)) equal_radii = false;

    if (equal_radii) {
        EnclosingBall meb = minimal_enclosing_ball(ap.generators);
        m.inradius = ap.r - meb.radius;
        m.incenter = meb.center;
    } else {
        m.inradius = inradius_chebyshev(ap, &m.incenter);
    }

    // farthest point of the region from x, over vertices and arc far-points
    auto far_dist = [&](const Vec& x) {
        double f = 0.0;
        for (const Vec& v : ap.vertices) f = std::max(f, dist(x, v));
        for (const Arc& arc : ap.arcs) {
            const Vec& q = ap.generators[arc.gen];
            const double D = dist(x, q);
            if (D <= 1e-15) {
                f = std::max(f, ap.radii[arc.gen]);
                continue;
            }
            const double far_angle = angle_of(q - x);
            if (norm_2pi(far_angle - arc.start) <= arc.span)
                f = std::max(f, D + ap.radii[arc.gen]);
        }
        return f;
    };
    double scale = std::max(1.0, ap.r);
    Vec lo, hi;
    bounding_box(ap.generators, ap.radii, lo, hi);
    BoxMax best =
        concave_max_2d([&](const Vec& x) { return -far_dist(x); }, lo, hi, 1e-11 * scale);
    m.circumcenter = best.arg;
    m.circumradius = -best.value;
    return m;
}

SupportPoint support_2d(const ArcPolygon& ap, const Vec& u_in) {
    if (ap.kind == RegionKind::empty) throw std::invalid_argument("support_2d: empty region");
    const double nu = norm(u_in);
    if (nu <= 0.0) throw std::invalid_argument("support_2d: zero direction");
    const Vec u = u_in * (1.0 / nu);

    if (ap.kind == RegionKind::single_point) return {dot(ap.point, u), ap.point};
    if (ap.kind == RegionKind::full_disk) {
        Vec arg = ap.point + ap.r * u;
        return {dot(arg, u), arg};
    }
    SupportPoint best{-1e300, Vec{0.0, 0.0}};
    for (const Vec& v : ap.vertices) {
        const double val = dot(v, u);
        if (val > best.value) best = {val, v};
    }
    const double ang = angle_of(u);
    for (const Arc& arc : ap.arcs) {
        if (norm_2pi(ang - arc.start) <= arc.span) {
            const Vec& q = ap.generators[arc.gen];
            const double val = dot(q, u) + ap.radii[arc.gen];
            if (val > best.value) best = {val, q + ap.radii[arc.gen] * u};
        }
    }
    return best;
}

Side contains_2d(const ArcPolygon& ap, const Vec& y, double eps) {
    if (ap.kind == RegionKind::empty) return Side::outside;
    if (ap.kind == RegionKind::single_point)
        return dist(y, ap.point) <= eps ? Side::boundary : Side::outside;
    double slack = 1e300;
    for (size_t i = 0; i < ap.generators.size(); ++i)
        slack = std::min(slack, ap.radii[i] - dist(y, ap.generators[i]));
    if (slack < -eps) return Side::outside;
    if (slack <= eps) return Side::boundary;
    return Side::inside;
}

}  // namespace bb
