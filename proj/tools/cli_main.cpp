// Batch front end over the ballbodies C API: compute geometric objects,
// evaluate lens/spindle profiles, run verification suites, and explore the
// conjectures. Exit codes: 0 pass, 1 confirmed violation, 2 input error,
// 3 inconclusive beyond budget.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ballbodies.h"

using nlohmann::json;

namespace {

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { bb_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

int fail_input(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

bool write_file(const std::string& path, const std::string& content) {
    // write-then-rename keeps partially written reports off disk
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) return false;
        out << content;
        if (!out) return false;
    }
    return std::rename(tmp.c_str(), path.c_str()) == 0;
}

uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

int emit(const std::string& text, const std::string& report_path) {
    if (report_path.empty()) {
        std::cout << text << "\n";
        return 0;
    }
    if (!write_file(report_path, text)) {
        std::cerr << "error: cannot write " << report_path << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"r-ball body toolkit"};
    app.require_subcommand(1);

    // ------------------------------------------------------------ compute --
    auto* compute = app.add_subcommand("compute", "P^r or conv_r P for a point configuration");
    std::string input_path, target = "polyhedron", report_path, csv_path;
    uint64_t samples = 100000;
    int64_t seed_opt = -1;
    compute->add_option("--input", input_path, "PointConfig JSON file")->required();
    compute->add_option("--target", target, "polyhedron | hull");
    compute->add_option("--samples", samples, "MC samples for d >= 3");
    compute->add_option("--seed", seed_opt, "RNG seed (entropy if omitted)");
    compute->add_option("--report", report_path, "output JSON path (stdout if omitted)");

    // ------------------------------------------------------------- shapes --
    auto* shapes = app.add_subcommand("shapes", "lens / spindle intrinsic volumes");
    std::string shape_kind;
    int shape_dim = 3;
    double shape_r = 1.0, shape_rho = -1.0, shape_lambda = -1.0;
    shapes->add_option("shape", shape_kind, "lens | spindle")->required();
    shapes->add_option("--dim", shape_dim, "dimension")->required();
    shapes->add_option("--r", shape_r, "ball radius")->required();
    shapes->add_option("--rho", shape_rho, "lens inradius");
    shapes->add_option("--lambda", shape_lambda, "spindle circumradius");
    shapes->add_option("--report", report_path, "output JSON path");

    // ------------------------------------------------------------- verify --
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite_id;
    json vp;
    int trials = 100, dim = 2, n_max = 10, k = 1, directions = 128, m_sites = 6;
    int sphere_dim = 2, kadets_n_max = 5;
    double epsilon = 0.5, r_lo = 1.1, r_hi = 5.0;
    uint64_t v_samples = 100000;
    int inconclusive_budget = -1;
    verify->add_option("suite", suite_id, "suite id (see --list in README)")->required();
    verify->add_option("--dim", dim, "ambient dimension");
    verify->add_option("--n", n_max, "max generator count");
    verify->add_option("--trials", trials, "number of trials");
    verify->add_option("--samples", v_samples, "MC samples per estimate");
    verify->add_option("--directions", directions, "direction count");
    verify->add_option("--k", k, "intrinsic volume index");
    verify->add_option("--sphere-dim", sphere_dim, "sphere dimension for sphere suites");
    verify->add_option("--epsilon", epsilon, "cap radius for sphere suites");
    verify->add_option("--sites", m_sites, "site count for sphere suites");
    verify->add_option("--kadets-n", kadets_n_max, "max pieces per covering");
    verify->add_option("--r-lo", r_lo, "min r/r0 ratio");
    verify->add_option("--r-hi", r_hi, "max r/r0 ratio");
    verify->add_option("--seed", seed_opt, "RNG seed (entropy if omitted)");
    verify->add_option("--budget", inconclusive_budget,
                       "max inconclusive trials before exit 3 (default 10%)");
    verify->add_option("--report", report_path, "report JSON path");
    verify->add_option("--csv", csv_path, "flat CSV path");

    // ------------------------------------------------------------ explore --
    auto* explore = app.add_subcommand("explore", "counterexample search for the conjectures");
    int conjecture = 1, iterations = 200;
    explore->add_option("conjecture", conjecture, "1 (lens) | 2 (spindle)")->required();
    explore->add_option("--dim", dim, "2 or 3");
    explore->add_option("--k", k, "intrinsic volume index");
    explore->add_option("--iterations", iterations, "hill-climbing steps");
    explore->add_option("--seed", seed_opt, "RNG seed (entropy if omitted)");
    explore->add_option("--report", report_path, "report JSON path");

    CLI11_PARSE(app, argc, argv);

    const uint64_t seed = seed_opt >= 0 ? static_cast<uint64_t>(seed_opt) : entropy_seed();

    if (compute->parsed()) {
        std::ifstream in(input_path);
        if (!in) return fail_input("cannot read " + input_path);
        std::stringstream buf;
        buf << in.rdbuf();

        bb_config* cfg = nullptr;
        bb_status st = bb_config_parse_json(buf.str().c_str(), &cfg);
        if (st != BB_OK) return fail_input(bb_last_error());

        OwnedString out;
        st = bb_measures_json(cfg, target.c_str(), samples, seed, &out.ptr);
        bb_config_free(cfg);
        if (st != BB_OK) return fail_input(bb_last_error());

        json j = json::parse(out.str());
        j["seed"] = seed;
        return emit(j.dump(2), report_path);
    }

    if (shapes->parsed()) {
        OwnedString out;
        bb_status st;
        if (shape_kind == "lens") {
            if (shape_rho <= 0.0) return fail_input("lens requires --rho");
            st = bb_lens_profile_json(shape_dim, shape_r, shape_rho, &out.ptr);
        } else if (shape_kind == "spindle") {
            if (shape_lambda <= 0.0) return fail_input("spindle requires --lambda");
            st = bb_spindle_profile_json(shape_dim, shape_r, shape_lambda, &out.ptr);
        } else {
            return fail_input("shape must be lens or spindle");
        }
        if (st != BB_OK) return fail_input(bb_last_error());
        return emit(json::parse(out.str()).dump(2), report_path);
    }

    if (verify->parsed()) {
        vp = {{"dim", dim},
              {"n_max", n_max},
              {"trials", trials},
              {"samples", v_samples},
              {"directions", directions},
              {"k", k},
              {"sphere_dim", sphere_dim},
              {"epsilon", epsilon},
              {"m_sites", m_sites},
              {"kadets_n_max", kadets_n_max},
              {"r_ratio_lo", r_lo},
              {"r_ratio_hi", r_hi},
              {"seed", seed}};
        OwnedString out;
        bb_status st = bb_suite_run(suite_id.c_str(), vp.dump().c_str(), &out.ptr);
        if (st != BB_OK) return fail_input(bb_last_error());

        json report = json::parse(out.str());
        const int fails = report["summary"]["fails"].get<int>();
        const int inconclusive = report["summary"]["inconclusive"].get<int>();
        const int budget =
            inconclusive_budget >= 0 ? inconclusive_budget : std::max(1, trials / 10);

        if (!report_path.empty() && !write_file(report_path, report.dump(2)))
            return fail_input("cannot write " + report_path);
        if (!csv_path.empty()) {
            OwnedString csv;
            if (bb_report_to_csv(out.ptr, &csv.ptr) != BB_OK)
                return fail_input(bb_last_error());
            if (!write_file(csv_path, csv.str())) return fail_input("cannot write " + csv_path);
        }
        std::cout << "suite " << suite_id << ": trials=" << report["summary"]["trials"]
                  << " passes=" << report["summary"]["passes"] << " fails=" << fails
                  << " inconclusive=" << inconclusive
                  << " min_margin=" << report["summary"]["min_margin"] << " seed=" << seed
                  << "\n";
        if (report_path.empty()) std::cout << report.dump(2) << "\n";
        if (fails > 0) return 1;
        if (inconclusive > budget) return 3;
        return 0;
    }

    if (explore->parsed()) {
        vp = {{"conjecture", conjecture},
              {"dim", dim},
              {"k", k},
              {"iterations", iterations},
              {"seed", seed}};
        OwnedString out;
        bb_status st = bb_explore_run(vp.dump().c_str(), &out.ptr);
        if (st != BB_OK) return fail_input(bb_last_error());
        json report = json::parse(out.str());
        if (!report_path.empty() && !write_file(report_path, report.dump(2)))
            return fail_input("cannot write " + report_path);
        std::cout << "explore conjecture " << conjecture << ": min_margin="
                  << report["summary"]["min_margin"] << " fails="
                  << report["summary"]["fails"] << " seed=" << seed << "\n";
        if (report_path.empty()) std::cout << report.dump(2) << "\n";
        return report["summary"]["fails"].get<int>() > 0 ? 1 : 0;
    }

    return 2;
}
