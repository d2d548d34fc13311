#include "ballbodies/meb.hpp"

#include <algorithm>
#include <cmath>
#include <list>
#include <stdexcept>

#include "ballbodies/linalg.hpp"
#include "ballbodies/minnorm.hpp"
#include "ballbodies/rng.hpp"

namespace bb {

namespace {

struct Indexed {
    Vec p;
    int idx;
};

// Smallest ball with all of `support` on its boundary. The center lies in the
// affine hull of the support points; near-dependent points make the system
// singular, in which case the dependent directions are dropped.
EnclosingBall ball_from_support(const std::vector<Indexed>& support) {
    EnclosingBall ball;
    if (support.empty()) {
        ball.radius = -1.0;  // empty ball contains nothing
        return ball;
    }
    const int d = support[0].p.dim();
    const int k = static_cast<int>(support.size()) - 1;
    ball.center = support[0].p;
    for (const auto& s : support) ball.support.push_back(s.idx);
    if (k == 0) {
        ball.radius = 0.0;
        return ball;
    }
    double scale2 = 1.0;
    std::vector<Vec> rel(k, Vec(d));
    for (int i = 0; i < k; ++i) {
        rel[i] = support[i + 1].p - support[0].p;
        scale2 = std::max(scale2, norm2(rel[i]));
    }
    std::vector<double> A(k * k), b(k);
    for (int i = 0; i < k; ++i) {
        b[i] = norm2(rel[i]);
        for (int j = 0; j < k; ++j) A[i * k + j] = 2.0 * dot(rel[i], rel[j]);
    }
    if (!solve_linear(A, b, k, 1e-12 * scale2)) {
        // affinely dependent support; fall back to the subset without the
        // most recently added point
        std::vector<Indexed> sub(support.begin(), support.end() - 1);
        return ball_from_support(sub);
    }
    for (int i = 0; i < k; ++i) ball.center += b[i] * rel[i];
    double r2 = 0.0;
    for (const auto& s : support) r2 = std::max(r2, dist2(ball.center, s.p));
    ball.radius = std::sqrt(r2);
    return ball;
}

bool inside(const EnclosingBall& ball, const Vec& p) {
    if (ball.radius < 0.0) return false;
    const double slack = 1e-12 * std::max(1.0, ball.radius * ball.radius);
    return dist2(ball.center, p) <= ball.radius * ball.radius + slack;
}

using List = std::list<Indexed>;

EnclosingBall welzl(List& pts, List::iterator end, std::vector<Indexed>& support, int d) {
    EnclosingBall ball = ball_from_support(support);
    if (static_cast<int>(support.size()) == d + 1) return ball;
    for (auto it = pts.begin(); it != end;) {
        auto cur = it++;
        if (!inside(ball, cur->p)) {
            support.push_back(*cur);
            ball = welzl(pts, cur, support, d);
            support.pop_back();
            pts.splice(pts.begin(), pts, cur);  // move-to-front
        }
    }
    return ball;
}

}  // namespace

EnclosingBall minimal_enclosing_ball(const std::vector<Vec>& points, uint64_t seed) {
    if (points.empty()) throw std::invalid_argument("minimal_enclosing_ball: empty input");
    const int d = points[0].dim();

    std::vector<Indexed> shuffled;
    shuffled.reserve(points.size());
    for (size_t i = 0; i < points.size(); ++i)
        shuffled.push_back({points[i], static_cast<int>(i)});
    Rng rng(seed, 0x6d656200);
    for (size_t i = shuffled.size(); i > 1; --i)
        std::swap(shuffled[i - 1], shuffled[rng.below(i)]);

    List pts(shuffled.begin(), shuffled.end());
    std::vector<Indexed> support;
    EnclosingBall ball = welzl(pts, pts.end(), support, d);

    // tighten the reported support set to points actually on the boundary
    std::vector<int> on_boundary;
    const double tol = 1e-9 * std::max(1.0, ball.radius);
    for (size_t i = 0; i < points.size(); ++i)
        if (std::fabs(dist(ball.center, points[i]) - ball.radius) <= tol)
            on_boundary.push_back(static_cast<int>(i));
    if (!on_boundary.empty()) ball.support = on_boundary;
    return ball;
}

bool certify_enclosing_ball(const std::vector<Vec>& points, const EnclosingBall& ball,
                            double tol) {
    const double scale = std::max(1.0, ball.radius);
    double maxdist = 0.0;
    for (const Vec& p : points) maxdist = std::max(maxdist, dist(ball.center, p));
    if (maxdist > ball.radius + tol * scale) return false;
    if (ball.radius <= tol) return true;  // single-point ball

    // KKT: the center must lie in the convex hull of the farthest points
    std::vector<Vec> far;
    for (const Vec& p : points)
        if (dist(ball.center, p) >= ball.radius - tol * scale) far.push_back(p - ball.center);
    if (far.empty()) return false;
    MinNormResult mn = min_norm_point(far);
    return mn.distance <= tol * scale;
}

}  // namespace bb
