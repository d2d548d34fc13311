#include "ballbodies.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "ballbodies/harness.hpp"
#include "ballbodies/json_io.hpp"
#include "ballbodies/planar.hpp"
#include "ballbodies/shapes.hpp"

using nlohmann::json;

struct bb_config {
    bb::PointConfig cfg;
};

struct bb_region2d {
    bb::ArcPolygon ap;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Maps C++ failures onto status codes; exception text lands in bb_last_error.
template <class F>
bb_status guarded(F&& f) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return BB_ERR_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        g_last_error = e.what();
        return BB_ERR_INFEASIBLE;
    } catch (const std::runtime_error& e) {
        g_last_error = e.what();
        const std::string w = e.what();
        return w.find("converge") != std::string::npos ? BB_ERR_NO_CONVERGENCE
                                                       : BB_ERR_INTERNAL;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return BB_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return BB_ERR_INTERNAL;
    }
}

bb::SuiteParams params_from_json(const char* text) {
    bb::SuiteParams p;
    if (text == nullptr || *text == '\0') return p;
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("params: malformed JSON");
    p.dim = j.value("dim", p.dim);
    p.n_max = j.value("n_max", p.n_max);
    p.trials = j.value("trials", p.trials);
    p.r_ratio_lo = j.value("r_ratio_lo", p.r_ratio_lo);
    p.r_ratio_hi = j.value("r_ratio_hi", p.r_ratio_hi);
    p.samples = j.value("samples", p.samples);
    p.directions = j.value("directions", p.directions);
    p.seed = j.value("seed", p.seed);
    p.k = j.value("k", p.k);
    p.sphere_dim = j.value("sphere_dim", p.sphere_dim);
    p.epsilon = j.value("epsilon", p.epsilon);
    p.m_sites = j.value("m_sites", p.m_sites);
    p.kadets_n_max = j.value("kadets_n_max", p.kadets_n_max);
    p.iterations = j.value("iterations", p.iterations);
    p.conjecture = j.value("conjecture", p.conjecture);
    return p;
}

}  // namespace

extern "C" {

const char* bb_version(void) { return "0.1.0"; }

const char* bb_status_name(bb_status status) {
    switch (status) {
        case BB_OK: return "ok";
        case BB_ERR_INVALID_ARGUMENT: return "invalid argument";
        case BB_ERR_INFEASIBLE: return "infeasible";
        case BB_ERR_NO_CONVERGENCE: return "no convergence";
        case BB_ERR_PARSE: return "parse error";
        case BB_ERR_INTERNAL: return "internal error";
    }
    return "?";
}

const char* bb_last_error(void) { return g_last_error.c_str(); }

void bb_string_free(char* s) { delete[] s; }

bb_status bb_config_create(int dim, double r, const double* coords, size_t npoints,
                           bb_config** out) {
    return guarded([&]() -> bb_status {
        if (coords == nullptr || out == nullptr)
            throw std::invalid_argument("config_create: null argument");
        std::vector<bb::Vec> pts;
        for (size_t i = 0; i < npoints; ++i) {
            bb::Vec v(dim);
            for (int k = 0; k < dim; ++k) v[k] = coords[i * dim + k];
            pts.push_back(v);
        }
        *out = new bb_config{bb::PointConfig(dim, r, std::move(pts))};
        return BB_OK;
    });
}

bb_status bb_config_parse_json(const char* text, bb_config** out) {
    bb_status st = guarded([&]() -> bb_status {
        if (text == nullptr || out == nullptr)
            throw std::invalid_argument("config_parse: null argument");
        *out = new bb_config{bb::point_config_from_json(text)};
        return BB_OK;
    });
    return (st == BB_ERR_INVALID_ARGUMENT && g_last_error.find("malformed") != std::string::npos)
               ? BB_ERR_PARSE
               : st;
}

void bb_config_free(bb_config* cfg) { delete cfg; }

int bb_config_dim(const bb_config* cfg) { return cfg ? cfg->cfg.dim : 0; }
double bb_config_radius(const bb_config* cfg) { return cfg ? cfg->cfg.radius : 0.0; }
size_t bb_config_count(const bb_config* cfg) { return cfg ? cfg->cfg.points.size() : 0; }

bb_status bb_config_to_json(const bb_config* cfg, char** json_out) {
    return guarded([&]() -> bb_status {
        if (!cfg || !json_out) throw std::invalid_argument("config_to_json: null argument");
        *json_out = dup_string(bb::point_config_to_json(cfg->cfg));
        return BB_OK;
    });
}

bb_status bb_enclosing_ball(const bb_config* cfg, uint64_t seed, double* center_out,
                            double* radius_out) {
    return guarded([&]() -> bb_status {
        if (!cfg || !center_out || !radius_out)
            throw std::invalid_argument("enclosing_ball: null argument");
        bb::EnclosingBall ball = bb::minimal_enclosing_ball(cfg->cfg.points, seed);
        for (int i = 0; i < cfg->cfg.dim; ++i) center_out[i] = ball.center[i];
        *radius_out = ball.radius;
        return BB_OK;
    });
}

bb_status bb_disk_intersection(const bb_config* cfg, bb_region2d** out) {
    return guarded([&]() -> bb_status {
        if (!cfg || !out) throw std::invalid_argument("disk_intersection: null argument");
        *out = new bb_region2d{bb::disk_intersection(cfg->cfg)};
        return BB_OK;
    });
}

bb_status bb_ball_hull_2d(const bb_config* cfg, bb_region2d** out) {
    return guarded([&]() -> bb_status {
        if (!cfg || !out) throw std::invalid_argument("ball_hull_2d: null argument");
        *out = new bb_region2d{bb::ball_hull_2d(cfg->cfg)};
        return BB_OK;
    });
}

void bb_region2d_free(bb_region2d* region) { delete region; }

int bb_region2d_kind(const bb_region2d* region) {
    if (!region) return 3;
    switch (region->ap.kind) {
        case bb::RegionKind::proper: return 0;
        case bb::RegionKind::full_disk: return 1;
        case bb::RegionKind::single_point: return 2;
        case bb::RegionKind::empty: return 3;
    }
    return 3;
}

bb_status bb_region2d_measures(const bb_region2d* region, double* area, double* perimeter,
                               double* inradius, double* circumradius) {
    return guarded([&]() -> bb_status {
        if (!region) throw std::invalid_argument("region_measures: null argument");
        bb::PlanarMeasures m = bb::measures(region->ap);
        if (area) *area = m.area;
        if (perimeter) *perimeter = m.perimeter;
        if (inradius) *inradius = m.inradius;
        if (circumradius) *circumradius = m.circumradius;
        return BB_OK;
    });
}

bb_status bb_region2d_support(const bb_region2d* region, double ux, double uy, double* value) {
    return guarded([&]() -> bb_status {
        if (!region || !value) throw std::invalid_argument("region_support: null argument");
        *value = bb::support_2d(region->ap, bb::Vec{ux, uy}).value;
        return BB_OK;
    });
}

bb_status bb_region2d_to_json(const bb_region2d* region, char** json_out) {
    return guarded([&]() -> bb_status {
        if (!region || !json_out) throw std::invalid_argument("region_to_json: null argument");
        *json_out = dup_string(bb::arc_polygon_to_json(region->ap));
        return BB_OK;
    });
}

bb_status bb_lens_profile_json(int dim, double r, double rho, char** json_out) {
    return guarded([&]() -> bb_status {
        if (!json_out) throw std::invalid_argument("lens_profile: null argument");
        *json_out = dup_string(bb::profile_to_json(bb::lens_measures(bb::LensSpec(dim, r, rho))));
        return BB_OK;
    });
}

bb_status bb_spindle_profile_json(int dim, double r, double lambda, char** json_out) {
    return guarded([&]() -> bb_status {
        if (!json_out) throw std::invalid_argument("spindle_profile: null argument");
        *json_out =
            dup_string(bb::profile_to_json(bb::spindle_measures(bb::SpindleSpec(dim, r, lambda))));
        return BB_OK;
    });
}

bb_status bb_mc_volume(const bb_config* cfg, uint64_t samples, uint64_t seed, double* value,
                       double* stderr_out) {
    return guarded([&]() -> bb_status {
        if (!cfg || !value) throw std::invalid_argument("mc_volume: null argument");
        bb::Estimate e = bb::mc_volume_polyhedron(cfg->cfg, samples, seed);
        *value = e.value;
        if (stderr_out) *stderr_out = e.stderr_;
        return BB_OK;
    });
}

bb_status bb_measures_json(const bb_config* cfg, const char* target, uint64_t samples,
                           uint64_t seed, char** json_out) {
    return guarded([&]() -> bb_status {
        if (!cfg || !json_out) throw std::invalid_argument("measures_json: null argument");
        const std::string tgt = target ? target : "polyhedron";
        const bool hull = tgt == "hull";
        if (!hull && tgt != "polyhedron")
            throw std::invalid_argument("measures_json: target must be polyhedron or hull");
        json j;
        j["target"] = tgt;
        if (cfg->cfg.dim == 2) {
            bb::ArcPolygon ap =
                hull ? bb::ball_hull_2d(cfg->cfg) : bb::disk_intersection(cfg->cfg);
            j["region"] = json::parse(bb::arc_polygon_to_json(ap));
            if (ap.kind == bb::RegionKind::proper || ap.kind == bb::RegionKind::full_disk) {
                bb::PlanarMeasures m = bb::measures(ap);
                j["measures"] = {{"area", m.area},
                                 {"perimeter", m.perimeter},
                                 {"v1", 0.5 * m.perimeter},
                                 {"inradius", m.inradius},
                                 {"circumradius", m.circumradius},
                                 {"provenance", "exact"}};
            }
            *json_out = dup_string(j.dump(2));
            return BB_OK;
        }
        if (hull)
            throw std::invalid_argument(
                "measures_json: hull measures are planar-only (outer approximations are one-sided "
                "in d >= 3)");
        bb::BallBody body(cfg->cfg);
        if (!body.feasible()) {
            j["region"] = {{"kind", "empty"}};
            *json_out = dup_string(j.dump(2));
            return BB_OK;
        }
        bb::Estimate vol = bb::mc_volume_polyhedron(cfg->cfg, samples, seed);
        bb::Estimate surf = bb::mc_surface_polyhedron(cfg->cfg, samples, seed + 1);
        bb::Estimate v1 = bb::mean_width_polyhedron(cfg->cfg, 128, seed + 2);
        const double r0 = body.circumball().radius;
        j["measures"] = {{"volume", json::parse(bb::estimate_to_json(vol))},
                         {"surface", json::parse(bb::estimate_to_json(surf))},
                         {"v1", json::parse(bb::estimate_to_json(v1))},
                         {"inradius", cfg->cfg.radius - r0},
                         {"circumradius_bound",
                          std::sqrt(std::max(0.0, cfg->cfg.radius * cfg->cfg.radius - r0 * r0))},
                         {"provenance", "monte-carlo"}};
        *json_out = dup_string(j.dump(2));
        return BB_OK;
    });
}

bb_status bb_suite_run(const char* suite_id, const char* params_json, char** report_json_out) {
    return guarded([&]() -> bb_status {
        if (!suite_id || !report_json_out)
            throw std::invalid_argument("suite_run: null argument");
        bb::SuiteParams p = params_from_json(params_json);
        bb::SuiteReport report = bb::run_suite(suite_id, p);
        *report_json_out = dup_string(bb::report_to_json(report));
        return BB_OK;
    });
}

bb_status bb_suite_list(char** json_out) {
    return guarded([&]() -> bb_status {
        if (!json_out) throw std::invalid_argument("suite_list: null argument");
        json j = json::array();
        for (const std::string& id : bb::suite_ids()) j.push_back(id);
        *json_out = dup_string(j.dump());
        return BB_OK;
    });
}

bb_status bb_explore_run(const char* params_json, char** report_json_out) {
    return guarded([&]() -> bb_status {
        if (!report_json_out) throw std::invalid_argument("explore_run: null argument");
        bb::SuiteParams p = params_from_json(params_json);
        bb::SuiteReport report =
            bb::explore_conjectures(p.conjecture, p.dim, p.k, p.iterations, p.seed);
        *report_json_out = dup_string(bb::report_to_json(report));
        return BB_OK;
    });
}

bb_status bb_report_to_csv(const char* report_json, char** csv_out) {
    return guarded([&]() -> bb_status {
        if (!report_json || !csv_out) throw std::invalid_argument("report_to_csv: null argument");
        json j = json::parse(report_json, nullptr, false);
        if (j.is_discarded()) throw std::invalid_argument("report_to_csv: malformed JSON");
        std::string out = "trial,lhs,rhs,margin,verdict\n";
        size_t i = 0;
        char buf[160];
        for (const auto& rec : j.at("records")) {
            std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g,%s\n", i++,
                          rec.value("lhs", 0.0), rec.value("rhs", 0.0), rec.value("margin", 0.0),
                          rec.value("verdict", std::string("?")).c_str());
            out += buf;
        }
        *csv_out = dup_string(out);
        return BB_OK;
    });
}

}  // extern "C"
