#pragma once

#include <algorithm>
#include <vector>

#include "ballbodies/geometry.hpp"
#include "ballbodies/linalg.hpp"

namespace bb {

// Result of projecting the origin onto conv(points): the nearest point, its
// distance, and convex coefficients over the input (zero off the support).
struct MinNormResult {
    Vec point;
    double distance = 0.0;
    std::vector<double> coefficients;
};

// Wolfe's minimum-norm-point algorithm over the convex hull of a small point
// set. Exact up to floating point; the corral never exceeds dim+1 points.
inline MinNormResult min_norm_point(const std::vector<Vec>& q, double tol = 1e-12) {
    const int m = static_cast<int>(q.size());
    if (m == 0) throw std::invalid_argument("min_norm_point: empty set");
    const int d = q[0].dim();

    double scale = 1.0;
    for (const Vec& p : q) scale = std::max(scale, norm(p));
    const double eps = tol * scale;

    // start from the shortest input point
    int start = 0;
    for (int i = 1; i < m; ++i)
        if (norm2(q[i]) < norm2(q[start])) start = i;

    std::vector<int> corral{start};
    std::vector<double> lambda{1.0};
    Vec x = q[start];

    // affine minimizer over the corral: minimize ||sum w_i q_i||, sum w_i = 1
    auto affine_min = [&](const std::vector<int>& S, std::vector<double>& w) -> bool {
        const int k = static_cast<int>(S.size());
        const int n = k + 1;
        std::vector<double> A(n * n, 0.0), b(n, 0.0);
        for (int i = 0; i < k; ++i) {
            A[0 * n + (i + 1)] = 1.0;
            A[(i + 1) * n + 0] = 1.0;
            for (int j = 0; j < k; ++j) A[(i + 1) * n + (j + 1)] = dot(q[S[i]], q[S[j]]);
        }
        b[0] = 1.0;
        if (!solve_linear(A, b, n, 1e-13 * std::max(1.0, scale * scale))) return false;
        w.assign(b.begin() + 1, b.end());
        return true;
    };

    for (int iter = 0; iter < 16 * (m + d + 4); ++iter) {
        // optimality: every point must satisfy <x, q_j> >= |x|^2 - eps
        const double xx = norm2(x);
        int best = -1;
        double bestv = xx - std::max(eps * std::max(1.0, norm(x)), tol);
        for (int j = 0; j < m; ++j) {
            const double v = dot(x, q[j]);
            if (v < bestv) {
                bestv = v;
                best = j;
            }
        }
        if (best < 0 || xx <= eps * eps) break;
        if (std::find(corral.begin(), corral.end(), best) != corral.end()) break;
        corral.push_back(best);
        lambda.push_back(0.0);

        // minor cycles: pull x toward the affine minimizer, shedding points
        // whose coefficient would turn negative
        for (;;) {
            std::vector<double> w;
            if (!affine_min(corral, w)) {
                // degenerate corral: drop the smallest contributor and retry
                int drop = 0;
                for (size_t i = 1; i < lambda.size(); ++i)
                    if (lambda[i] < lambda[drop]) drop = static_cast<int>(i);
                corral.erase(corral.begin() + drop);
                lambda.erase(lambda.begin() + drop);
                if (corral.size() <= 1) {
                    lambda = {1.0};
                    break;
                }
                continue;
            }
            bool interior = true;
            for (double wi : w)
                if (wi <= 1e-12) interior = false;
            if (interior) {
                lambda = w;
                break;
            }
            // largest step keeping coefficients nonnegative
            double theta = 1.0;
            for (size_t i = 0; i < w.size(); ++i) {
                if (w[i] < lambda[i]) {
                    const double t = lambda[i] / (lambda[i] - w[i]);
                    theta = std::min(theta, t);
                }
            }
            for (size_t i = 0; i < w.size(); ++i)
                lambda[i] = (1.0 - theta) * lambda[i] + theta * w[i];
            // remove zeroed points
            for (int i = static_cast<int>(lambda.size()) - 1; i >= 0; --i) {
                if (lambda[i] <= 1e-12) {
                    corral.erase(corral.begin() + i);
                    lambda.erase(lambda.begin() + i);
                }
            }
            if (corral.empty()) {
                corral = {best};
                lambda = {1.0};
                break;
            }
        }
        x = Vec(d);
        for (size_t i = 0; i < corral.size(); ++i) x += lambda[i] * q[corral[i]];
    }

    MinNormResult res;
    res.point = x;
    res.distance = norm(x);
    res.coefficients.assign(m, 0.0);
    for (size_t i = 0; i < corral.size(); ++i) res.coefficients[corral[i]] = lambda[i];
    return res;
}

}  // namespace bb
