#include "ballbodies/highd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ballbodies/rng.hpp"
#include "ballbodies/unit_ball.hpp"

namespace bb {

namespace {

constexpr uint64_t kBlock = 1 << 16;  // substream block for MC reproducibility

double config_scale(const PointConfig& cfg) {
    double s = std::max(1.0, cfg.radius);
    for (const Vec& p : cfg.points)
        for (int i = 0; i < cfg.dim; ++i) s = std::max(s, std::fabs(p[i]));
    return s;
}

std::vector<Vec> dedup(const std::vector<Vec>& pts, double eps) {
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

}  // namespace

BallBody::BallBody(PointConfig config, uint64_t seed) : cfg_(std::move(config)) {
    cfg_.validate();
    cfg_.points = dedup(cfg_.points, 1e-13 * config_scale(cfg_));
    meb_ = minimal_enclosing_ball(cfg_.points, seed);
}

double BallBody::outer_radius() const {
    const double r = cfg_.radius, r0 = meb_.radius;
    return std::sqrt(std::max(0.0, r * r - r0 * r0));
}

bool BallBody::member(const Vec& y, double eps) const {
    if (y.dim() != cfg_.dim) throw std::invalid_argument("member: dimension mismatch");
    for (const Vec& p : cfg_.points)
        if (dist(y, p) > cfg_.radius + eps) return false;
    return true;
}

double BallBody::max_violation(const Vec& y) const {
    double v = -1e300;
    for (const Vec& p : cfg_.points) v = std::max(v, dist(y, p) - cfg_.radius);
    return v;
}

Vec BallBody::project(const Vec& y, double tol, int max_cycles) const {
    const double scale = config_scale(cfg_);
    if (!feasible(1e-9 * scale))
        throw std::domain_error("project: intersection is empty (r_cr > r)");
    if (max_violation(y) <= 0.0) return y;

    const double r = cfg_.radius;
    const size_t n = cfg_.points.size();
    Vec x = y;
    std::vector<Vec> corr(n, Vec(cfg_.dim));
    for (int cycle = 0; cycle < max_cycles; ++cycle) {
        double shift = 0.0;
        for (size_t i = 0; i < n; ++i) {
            Vec w = x + corr[i];
            Vec xn = w;
            const Vec& p = cfg_.points[i];
            const double d = dist(w, p);
            if (d > r) xn = p + (w - p) * (r / d);
            Vec cn = w - xn;
            shift = std::max(shift, dist(cn, corr[i]));
            corr[i] = cn;
            x = xn;
        }
        if (shift <= tol * scale && max_violation(x) <= tol * scale) return x;
    }
    throw std::runtime_error("project: Dykstra did not converge within the cycle cap");
}

BallBody::Support BallBody::support(const Vec& u_in, double tol) const {
    const double scale = config_scale(cfg_);
    if (!feasible(1e-9 * scale))
        throw std::domain_error("support: intersection is empty (r_cr > r)");
    const double nu = norm(u_in);
    if (nu <= 0.0) throw std::invalid_argument("support: zero direction");
    const Vec u = u_in * (1.0 / nu);

    const double r = cfg_.radius;
    if (cfg_.points.size() == 1) {
        Vec arg = cfg_.points[0] + r * u;
        return {dot(arg, u), arg, true};
    }

    // projected ascent; any fixed point maximizes <u, .> since u then lies in
    // the normal cone. The moderate step keeps iterates near the body, where
    // the Dykstra projection converges quickly.
    const double eta = 0.5 * r;
    const double inner_tol = std::min(1e-10, 0.1 * tol);
    Vec x = meb_.center;
    double move_tol = std::max(1e-13, 0.05 * tol) * scale;
    int calm = 0;
    for (int it = 0; it < 400; ++it) {
        Vec xn = project(x + eta * u, inner_tol, 20000);
        const double move = dist(xn, x);
        x = xn;
        if (move <= move_tol) {
            if (++calm >= 2) break;
        } else {
            calm = 0;
        }
    }
    Support s;
    s.argmax = x;
    s.value = dot(x, u);
    Vec probe = project(x + 0.01 * r * u, inner_tol, 20000);
    s.stationary = dist(probe, x) <= std::max(1e-9, tol) * scale;
    return s;
}

bool member_polyhedron(const PointConfig& config, const Vec& y, double eps) {
    return BallBody(config).member(y, eps);
}

Vec project_polyhedron(const PointConfig& config, const Vec& y, double tol, int max_cycles) {
    return BallBody(config).project(y, tol, max_cycles);
}

BallBody::Support support_polyhedron(const PointConfig& config, const Vec& u, double tol) {
    return BallBody(config).support(u, tol);
}

Estimate mc_volume_polyhedron(const PointConfig& config, uint64_t samples, uint64_t seed) {
    BallBody body(config);
    if (!body.feasible()) throw std::domain_error("mc_volume: intersection is empty");
    if (samples == 0) throw std::invalid_argument("mc_volume: need samples > 0");
    const int d = body.dim();
    const double R = body.outer_radius();
    const Vec& c = body.circumball().center;
    const double r = body.radius();

    uint64_t hits = 0;
    for (uint64_t done = 0; done < samples;) {
        const uint64_t block = std::min<uint64_t>(kBlock, samples - done);
        Rng rng(seed, done / kBlock);
        for (uint64_t i = 0; i < block; ++i) {
            Vec z = c + rng.in_ball(d, R);
            bool in = true;
            for (const Vec& p : body.config().points)
                if (dist2(z, p) > r * r) {
                    in = false;
                    break;
                }
            hits += in;
        }
        done += block;
    }
    const double ball_vol = unit_ball_volume(d) * std::pow(R, d);
    const double p = static_cast<double>(hits) / samples;
    Estimate e;
    e.value = ball_vol * p;
    e.stderr_ = ball_vol * std::sqrt(std::max(0.0, p * (1.0 - p)) / samples);
    e.samples = samples;
    e.seed = seed;
    e.method = "mc-volume";
    return e;
}

Estimate mc_surface_polyhedron(const PointConfig& config, uint64_t samples, uint64_t seed) {
    BallBody body(config);
    if (!body.feasible()) throw std::domain_error("mc_surface: intersection is empty");
    const double scale = config_scale(body.config());
    if (body.radius() - body.circumball().radius <= 1e-9 * scale)
        throw std::domain_error("mc_surface: region has empty interior");
    const int d = body.dim();
    const double r = body.radius();
    const auto& gens = body.config().points;
    const uint64_t per = std::max<uint64_t>(1, samples / gens.size());
    const double sphere_area = sphere_surface(d) * std::pow(r, d - 1);

    double value = 0.0, var = 0.0;
    for (size_t g = 0; g < gens.size(); ++g) {
        uint64_t hits = 0;
        for (uint64_t done = 0; done < per;) {
            const uint64_t block = std::min<uint64_t>(kBlock, per - done);
            Rng rng(seed, (g << 20) ^ (done / kBlock));
            for (uint64_t i = 0; i < block; ++i) {
                Vec z = gens[g] + r * rng.unit_vec(d);
                bool in = true;
                for (size_t j = 0; j < gens.size(); ++j) {
                    if (j == g) continue;
                    if (dist2(z, gens[j]) > r * r) {
                        in = false;
                        break;
                    }
                }
                hits += in;
            }
            done += block;
        }
        const double p = static_cast<double>(hits) / per;
        value += sphere_area * p;
        const double se = sphere_area * std::sqrt(std::max(0.0, p * (1.0 - p)) / per);
        var += se * se;
    }
    Estimate e;
    e.value = value;  // surface area, i.e. 2 V_{d-1}
    e.stderr_ = std::sqrt(var);
    e.samples = per * gens.size();
    e.seed = seed;
    e.method = "mc-surface";
    return e;
}

Estimate mean_width_polyhedron(const PointConfig& config, int directions, uint64_t seed,
                               double tol) {
    if (directions < 2) throw std::invalid_argument("mean_width: need at least 2 directions");
    BallBody body(config);
    if (!body.feasible()) throw std::domain_error("mean_width: intersection is empty");
    const int d = body.dim();

    double sum = 0.0, sumsq = 0.0;
    for (int j = 0; j < directions; ++j) {
        Rng rng(seed, 0x77 + j);
        const Vec u = rng.unit_vec(d);
        const Vec mu = u * -1.0;
        const double w = body.support(u, tol).value + body.support(mu, tol).value;
        sum += w;
        sumsq += w * w;
    }
    const double mean = sum / directions;
    const double variance = std::max(0.0, sumsq / directions - mean * mean);
    const double factor = d * unit_ball_volume(d) / (2.0 * unit_ball_volume(d - 1));
    Estimate e;
    e.value = factor * mean;
    e.stderr_ = factor * std::sqrt(variance / directions);
    e.samples = directions;
    e.seed = seed;
    e.method = "mc-mean-width";
    return e;
}

std::vector<Vec> spread_directions(int dim, int count, uint64_t seed) {
    if (dim < 2 || count < 1) throw std::invalid_argument("spread_directions: bad arguments");
    std::vector<Vec> dirs;
    dirs.reserve(count);
    const int base = (dim <= 3) ? (3 * count + 3) / 4 : 0;
    if (dim == 2) {
        for (int k = 0; k < base; ++k) {
            const double t = 2.0 * M_PI * k / base;
            dirs.push_back(Vec{std::cos(t), std::sin(t)});
        }
    } else if (dim == 3) {
        const double golden = M_PI * (3.0 - std::sqrt(5.0));
        for (int k = 0; k < base; ++k) {
            const double z = 1.0 - 2.0 * (k + 0.5) / base;
            const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double t = golden * k;
            dirs.push_back(Vec{rho * std::cos(t), rho * std::sin(t), z});
        }
    }
    Rng rng(seed, 0xd125);
    while (static_cast<int>(dirs.size()) < count) dirs.push_back(rng.unit_vec(dim));
    // shuffle so that prefixes of the list are themselves well spread
    for (size_t i = dirs.size(); i > 1; --i) std::swap(dirs[i - 1], dirs[rng.below(i)]);
    return dirs;
}

OuterHullApprox hull_outer_approx(const PointConfig& config, int m, uint64_t seed, double tol) {
    if (m < 1) throw std::invalid_argument("hull_outer_approx: need m >= 1");
    BallBody body(config);
    if (!body.feasible()) throw std::domain_error("hull_outer_approx: intersection is empty");

    OuterHullApprox out;
    out.base = body.config();
    out.directions = spread_directions(body.dim(), m, seed);
    for (const Vec& u : out.directions) {
        BallBody::Support s = body.support(u, tol);
        Vec c = body.project(s.argmax, 1e-12, 20000);  // tighten the witness
        out.max_witness_violation = std::max(out.max_witness_violation, body.max_violation(c));
        out.centers.push_back(c);
    }
    return out;
}

PointConfig OuterHullApprox::induced_config(int m) const {
    const int take = (m < 0) ? static_cast<int>(centers.size())
                             : std::min<int>(m, static_cast<int>(centers.size()));
    std::vector<Vec> pts(centers.begin(), centers.begin() + take);
    return PointConfig(base.dim, base.radius, std::move(pts));
}

Estimate outer_hull_volume(const OuterHullApprox& approx, int m, uint64_t samples, uint64_t seed,
                           const Vec& ref_center, double ref_radius) {
    const int d = approx.base.dim;
    const double r = approx.base.radius;
    const int take = std::min<int>(m, static_cast<int>(approx.centers.size()));
    uint64_t hits = 0;
    for (uint64_t done = 0; done < samples;) {
        const uint64_t block = std::min<uint64_t>(kBlock, samples - done);
        Rng rng(seed, done / kBlock);
        for (uint64_t i = 0; i < block; ++i) {
            Vec z = ref_center + rng.in_ball(d, ref_radius);
            bool in = true;
            for (int j = 0; j < take; ++j)
                if (dist2(z, approx.centers[j]) > r * r) {
                    in = false;
                    break;
                }
            hits += in;
        }
        done += block;
    }
    const double ball_vol = unit_ball_volume(d) * std::pow(ref_radius, d);
    const double p = static_cast<double>(hits) / samples;
    Estimate e;
    e.value = ball_vol * p;
    e.stderr_ = ball_vol * std::sqrt(std::max(0.0, p * (1.0 - p)) / samples);
    e.samples = samples;
    e.seed = seed;
    e.method = "mc-outer-hull";
    return e;
}

}  // namespace bb
