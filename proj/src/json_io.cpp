#include "ballbodies/json_io.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bb {

using nlohmann::json;

namespace {

json vec_to_json(const Vec& v, int dim) {
    json a = json::array();
    for (int i = 0; i < dim; ++i) a.push_back(v[i]);
    return a;
}

Vec vec_from_json(const json& a) {
    if (!a.is_array() || a.size() < 1 || a.size() > static_cast<size_t>(kMaxDim))
        throw std::invalid_argument("json: bad coordinate array");
    Vec v(static_cast<int>(a.size()));
    for (size_t i = 0; i < a.size(); ++i) v[static_cast<int>(i)] = a[i].get<double>();
    return v;
}

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::exact: return "exact";
        case Provenance::quadrature: return "quadrature";
        case Provenance::monte_carlo: return "monte-carlo";
    }
    return "?";
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("json: malformed document");
    return j;
}

}  // namespace

std::string point_config_to_json(const PointConfig& cfg) {
    json pts = json::array();
    for (const Vec& p : cfg.points) pts.push_back(vec_to_json(p, cfg.dim));
    return json{{"schema", "pointconfig/1"}, {"dim", cfg.dim}, {"r", cfg.radius}, {"points", pts}}
        .dump();
}

PointConfig point_config_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("dim") || !j.contains("r") || !j.contains("points"))
        throw std::invalid_argument("pointconfig: requires dim, r, points");
    const int dim = j["dim"].get<int>();
    const double r = j["r"].get<double>();
    std::vector<Vec> pts;
    for (const auto& a : j["points"]) {
        Vec v = vec_from_json(a);
        if (v.dim() != dim) throw std::invalid_argument("pointconfig: dimension mismatch");
        pts.push_back(v);
    }
    return PointConfig(dim, r, std::move(pts));
}

std::string arc_polygon_to_json(const ArcPolygon& ap) {
    json j;
    switch (ap.kind) {
        case RegionKind::proper: j["kind"] = "proper"; break;
        case RegionKind::full_disk: j["kind"] = "full-disk"; break;
        case RegionKind::single_point: j["kind"] = "single-point"; break;
        case RegionKind::empty: j["kind"] = "empty"; break;
    }
    j["r"] = ap.r;
    if (ap.kind == RegionKind::full_disk || ap.kind == RegionKind::single_point)
        j["point"] = vec_to_json(ap.point, 2);
    json verts = json::array();
    for (const Vec& v : ap.vertices) verts.push_back(vec_to_json(v, 2));
    j["vertices"] = verts;
    json arcs = json::array();
    for (const Arc& a : ap.arcs)
        arcs.push_back({{"center", vec_to_json(ap.generators[a.gen], 2)},
                        {"start", a.start},
                        {"end", a.start + a.span}});
    j["arcs"] = arcs;
    json gens = json::array();
    for (const Vec& g : ap.generators) gens.push_back(vec_to_json(g, 2));
    j["generators"] = gens;
    return j.dump();
}

std::string estimate_to_json(const Estimate& e) {
    return json{{"value", e.value},
                {"stderr", e.stderr_},
                {"samples", e.samples},
                {"seed", e.seed},
                {"method", e.method}}
        .dump();
}

std::string profile_to_json(const IntrinsicProfile& p) {
    json values = json::object();
    for (const auto& [k, entry] : p.values) {
        json v{{"value", entry.value}, {"provenance", provenance_name(entry.provenance)}};
        if (entry.provenance == Provenance::monte_carlo) v["stderr"] = entry.stderr_;
        values[std::to_string(k)] = v;
    }
    return json{{"dim", p.dim}, {"values", values}}.dump();
}

std::string spherical_config_to_json(const SphericalConfig& cfg) {
    json pts = json::array();
    for (const Vec& p : cfg.points) pts.push_back(vec_to_json(p, cfg.sphere_dim + 1));
    return json{{"schema", "sphericalconfig/1"},
                {"sphere_dim", cfg.sphere_dim},
                {"epsilon", cfg.epsilon},
                {"points", pts}}
        .dump();
}

SphericalConfig spherical_config_from_json(const std::string& text) {
    json j = parse(text);
    SphericalConfig cfg;
    cfg.sphere_dim = j.at("sphere_dim").get<int>();
    cfg.epsilon = j.at("epsilon").get<double>();
    for (const auto& a : j.at("points")) cfg.points.push_back(vec_from_json(a));
    cfg.validate();
    return cfg;
}

std::string report_to_json(const SuiteReport& report, bool include_timing) {
    json records = json::array();
    for (const SuiteRecord& r : report.records) {
        json rec{{"instance", r.instance.empty() ? json() : json::parse(r.instance)},
                 {"lhs", r.lhs},
                 {"rhs", r.rhs},
                 {"lhs_stderr", r.lhs_stderr},
                 {"rhs_stderr", r.rhs_stderr},
                 {"margin", r.margin},
                 {"verdict", r.verdict},
                 {"note", r.note}};
        if (!r.witness.empty()) rec["witness"] = json::parse(r.witness);
        records.push_back(rec);
    }
    json j{{"schema", "suitereport/1"},
           {"tool_version", "0.1.0"},
           {"suite", report.suite},
           {"params", report.params.empty() ? json() : json::parse(report.params)},
           {"seed", report.seed},
           {"records", records},
           {"summary",
            {{"trials", report.summary.trials},
             {"passes", report.summary.passes},
             {"fails", report.summary.fails},
             {"inconclusive", report.summary.inconclusive},
             {"min_margin", report.summary.min_margin}}}};
    if (include_timing) j["timing"] = {{"wall_ms", report.summary.wall_ms}};
    return j.dump(2);
}

std::string report_to_csv(const SuiteReport& report) {
    std::ostringstream out;
    out.precision(17);
    out << "trial,lhs,rhs,margin,verdict\n";
    for (size_t i = 0; i < report.records.size(); ++i) {
        const SuiteRecord& r = report.records[i];
        out << i << ',' << r.lhs << ',' << r.rhs << ',' << r.margin << ',' << r.verdict << '\n';
    }
    return out.str();
}

}  // namespace bb
