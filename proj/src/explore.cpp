#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "ballbodies/harness.hpp"
#include "ballbodies/planar.hpp"
#include "ballbodies/rng.hpp"
#include "ballbodies/shapes.hpp"
#include "ballbodies/unit_ball.hpp"

namespace bb {

using nlohmann::json;

namespace {

json points_json(const PointConfig& cfg) {
    json pts = json::array();
    for (const Vec& p : cfg.points) {
        json c = json::array();
        for (int i = 0; i < cfg.dim; ++i) c.push_back(p[i]);
        pts.push_back(c);
    }
    return pts;
}

std::vector<Vec> renormalize(std::vector<Vec> pts, double r0, uint64_t seed) {
    EnclosingBall meb = minimal_enclosing_ball(pts, seed);
    if (meb.radius <= 1e-9) throw std::runtime_error("explore: degenerate candidate");
    const double s = r0 / meb.radius;
    for (Vec& p : pts) p = (p - meb.center) * s;
    return pts;
}

struct MarginEval {
    double margin = 0.0;
    double stderr_ = 0.0;
};

// Violation margin rhs - lhs of the requested conjecture on one normalized
// configuration. In d = 3 the conjecture-2 right side uses the outer hull
// approximation, which overestimates V_k(conv_r P); a negative margin is
// therefore still a genuine counterexample candidate.
MarginEval eval_margin(int conjecture, int k, const PointConfig& cfg, double r0,
                       uint64_t samples, int directions, uint64_t seed) {
    const int d = cfg.dim;
    const double r = cfg.radius;
    if (conjecture == 1) {
        const IntrinsicProfile lens = lens_measures(LensSpec(d, r, r - r0));
        const double rhs = lens.at(k);
        if (d == 2) {
            ArcPolygon ap = disk_intersection(cfg, seed);
            const double lhs = (k == 2) ? area(ap) : 0.5 * perimeter(ap);
            return {rhs - lhs, 0.0};
        }
        if (k == d) {
            Estimate e = mc_volume_polyhedron(cfg, samples, seed);
            return {rhs - e.value, e.stderr_};
        }
        if (k == d - 1) {
            Estimate e = mc_surface_polyhedron(cfg, samples, seed);
            return {rhs - 0.5 * e.value, 0.5 * e.stderr_};
        }
        Estimate e = mean_width_polyhedron(cfg, directions, seed);
        return {rhs - e.value, e.stderr_};
    }
    // conjecture 2: V_k(S_{r, r0, d}) <= V_k(conv_r P)
    const IntrinsicProfile spindle = spindle_measures(SpindleSpec(d, r, r0));
    const double lhs = spindle.at(k);
    if (d == 2) {
        ArcPolygon hull = ball_hull_2d(cfg, seed);
        const double rhs = (k == 2) ? area(hull) : 0.5 * perimeter(hull);
        return {rhs - lhs, 0.0};
    }
    OuterHullApprox approx = hull_outer_approx(cfg, 64, seed);
    PointConfig induced = approx.induced_config();
    if (k == d) {
        Estimate e = mc_volume_polyhedron(induced, samples, seed);
        return {e.value - lhs, e.stderr_};
    }
    if (k == d - 1) {
        Estimate e = mc_surface_polyhedron(induced, samples, seed);
        return {0.5 * e.value - lhs, 0.5 * e.stderr_};
    }
    Estimate e = mean_width_polyhedron(induced, directions, seed);
    return {e.value - lhs, e.stderr_};
}

}  // namespace

SuiteReport explore_conjectures(int conjecture, int d, int k, int iterations, uint64_t seed) {
    if (conjecture != 1 && conjecture != 2)
        throw std::invalid_argument("explore_conjectures: conjecture must be 1 or 2");
    if (d < 2 || d > 3) throw std::invalid_argument("explore_conjectures: d must be 2 or 3");
    if (k < 1 || k >= d) throw std::invalid_argument("explore_conjectures: need 1 <= k < d");

    const auto t0 = std::chrono::steady_clock::now();
    const double r0 = 1.0;
    const uint64_t samples = (d == 2) ? 0 : 20000;
    const int directions = 48;

    SuiteReport report;
    report.suite = conjecture == 1 ? "explore-conjecture1" : "explore-conjecture2";
    report.seed = seed;
    report.params = json{{"conjecture", conjecture}, {"dim", d},   {"k", k},
                         {"iterations", iterations}, {"seed", seed}}
                        .dump();

    Rng master(seed, 0xe8);
    int restarts = 0;

    auto fresh = [&]() {
        InstanceSpec spec;
        spec.dim = d;
        spec.count = 3 + static_cast<int>(master.below(5));
        spec.r0 = r0;
        spec.r = master.uniform(1.2, 3.0);
        spec.seed = splitmix64(seed += 0x9e37);
        return gen_config(spec);
    };

    PointConfig current = fresh();
    MarginEval cur = eval_margin(conjecture, k, current, r0, samples, directions, master.next_u64());
    PointConfig best = current;
    MarginEval best_eval = cur;
    double sigma = 0.25;
    int rejects = 0;

    for (int it = 0; it < iterations; ++it) {
        std::vector<Vec> pts = current.points;
        for (Vec& p : pts)
            for (int i = 0; i < d; ++i) p[i] += sigma * master.normal();
        MarginEval cand_eval;
        PointConfig cand = current;
        try {
            cand.points = renormalize(std::move(pts), r0, master.next_u64());
            cand_eval = eval_margin(conjecture, k, cand, r0, samples, directions,
                                    master.next_u64());
        } catch (const std::exception&) {
            ++rejects;
            continue;
        }
        if (cand_eval.margin < cur.margin) {
            current = cand;
            cur = cand_eval;
            rejects = 0;
            if (cur.margin < best_eval.margin) {
                best = current;
                best_eval = cur;
            }
            SuiteRecord rec;
            rec.instance = json{{"iteration", it}, {"r", current.radius}}.dump();
            rec.note = "accepted-step";
            rec.lhs = 0.0;
            rec.rhs = 0.0;
            rec.margin = cur.margin;
            rec.lhs_stderr = cur.stderr_;
            rec.verdict = "recorded";
            report.records.push_back(std::move(rec));
        } else if (++rejects >= 20) {
            sigma *= 0.5;
            rejects = 0;
            if (sigma < 1e-4) {
                current = fresh();
                cur = eval_margin(conjecture, k, current, r0, samples, directions,
                                  master.next_u64());
                sigma = 0.25;
                ++restarts;
            }
        }
    }

    // escalate the best candidate before reporting any violation
    const double band = std::max(1e-9, 3.0 * best_eval.stderr_);
    std::string final_verdict = "pass";
    MarginEval confirm = best_eval;
    if (best_eval.margin < -band) {
        confirm = eval_margin(conjecture, k, best, r0, samples ? samples * 10 : 0,
                              directions * 4, master.next_u64());
        final_verdict =
            confirm.margin < -std::max(1e-9, 3.0 * confirm.stderr_) ? "fail" : "inconclusive";
    }

    SuiteRecord bestrec;
    bestrec.instance = json{{"r", best.radius}, {"r0", r0}}.dump();
    bestrec.note = "best-candidate";
    bestrec.margin = confirm.margin;
    bestrec.lhs_stderr = confirm.stderr_;
    bestrec.verdict = final_verdict;
    bestrec.witness = json{{"points", points_json(best)}, {"restarts", restarts}}.dump();
    report.records.push_back(bestrec);

    SuiteSummary& s = report.summary;
    s.trials = static_cast<int>(report.records.size());
    s.min_margin = confirm.margin;
    s.fails = final_verdict == "fail" ? 1 : 0;
    s.inconclusive = final_verdict == "inconclusive" ? 1 : 0;
    s.passes = s.trials - s.fails - s.inconclusive;
    s.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace bb
