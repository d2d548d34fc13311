#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ballbodies/geometry.hpp"
#include "ballbodies/highd.hpp"

namespace bb {

enum class GenKind { generic, simplex_centered, antipodal_pair };

// Instance descriptor for one randomized trial. Generated configurations are
// normalized so the circumcenter sits at the origin and r_cr(P) = r0.
struct InstanceSpec {
    int dim = 2;
    int count = 2;
    double r0 = 1.0;
    double r = 2.0;
    uint64_t seed = 0;
    GenKind kind = GenKind::generic;
    int simplex_l = -1;
};

struct McOptions {
    uint64_t samples = 100000;
    int directions = 128;
    double confidence = 3.0;
    int escalation = 10;                        // sample multiplier for fail candidates
    std::vector<int> outer_m = {128, 256, 512, 1024};
};

// One inequality trial. margin = rhs - lhs; fail only after escalation
// confirms margin < -(combined tolerance); inconclusive when the margin sits
// inside the noise band.
struct SuiteRecord {
    std::string instance;  // JSON
    double lhs = 0.0;
    double rhs = 0.0;
    double lhs_stderr = 0.0;
    double rhs_stderr = 0.0;
    double margin = 0.0;
    std::string verdict;
    std::string note;
    std::string witness;  // JSON, empty when absent
};

struct SuiteSummary {
    int trials = 0;
    int passes = 0;
    int fails = 0;
    int inconclusive = 0;
    double min_margin = 1e300;
    double wall_ms = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::string params;  // JSON
    uint64_t seed = 0;
    std::vector<SuiteRecord> records;
    SuiteSummary summary;
};

// ------------------------------------------------------------ generators ---

PointConfig gen_config(const InstanceSpec& spec);

struct SimplexCentered {
    PointConfig config;
    std::vector<double> barycentric;  // certificate: coefficients of o
};

// l+1 points on r0 S^{d-1} spanning an l-simplex with o in its relative
// interior (all barycentric coordinates >= 1e-3).
SimplexCentered gen_simplex_centered(int d, int l, double r0, uint64_t seed);

// Regular l-simplex inscribed in r0 S^{l-1}, randomly oriented inside E^d.
PointConfig gen_regular_simplex(int d, int l, double r0, uint64_t seed);

// -------------------------------------------------------------- checkers ---

SuiteRecord check_theorem1(const InstanceSpec& spec, const McOptions& mc = {});
SuiteRecord check_theorem2(const InstanceSpec& spec, int k, const McOptions& mc = {});
SuiteRecord check_conjecture1(const InstanceSpec& spec, int k, const McOptions& mc = {});
SuiteRecord check_theorem3(const InstanceSpec& spec, const McOptions& mc = {});
SuiteRecord check_corollary_intrinsic(const InstanceSpec& spec, int k, const McOptions& mc = {});
SuiteRecord check_remark_inradius(const InstanceSpec& spec);
SuiteRecord check_max_circumradius(const InstanceSpec& spec, const McOptions& mc = {});
SuiteRecord check_symmetral_record(const PointConfig& q, int directions = 360);
SuiteRecord check_minkowski_record(const PointConfig& p, int directions = 360);
SuiteRecord check_jung_symmetral(int d, int l, double r0, uint64_t seed, bool regular = false);
SuiteRecord check_kadets(double r, int n, uint64_t seed);
SuiteRecord check_sphere_lemma(int sphere_dim, int m, double eps, uint64_t samples, uint64_t seed);
SuiteRecord check_voronoi_density(int sphere_dim, int m, double eps, uint64_t samples,
                                  uint64_t seed);

// --------------------------------------------------------------- suites ----

struct SuiteParams {
    int dim = 2;
    int n_max = 10;
    int trials = 100;
    double r_ratio_lo = 1.1;
    double r_ratio_hi = 5.0;
    uint64_t samples = 100000;
    int directions = 128;
    uint64_t seed = 0;
    int k = 1;
    int sphere_dim = 2;
    double epsilon = 0.5;
    int m_sites = 6;
    int kadets_n_max = 5;
    int iterations = 200;
    int conjecture = 1;
};

std::vector<std::string> suite_ids();
SuiteReport run_suite(const std::string& suite_id, const SuiteParams& params);

// Counterexample search by seeded hill climbing on the violation margin.
SuiteReport explore_conjectures(int conjecture, int d, int k, int iterations, uint64_t seed);

// Shared helpers.
std::string verdict_for(double margin, double band);
std::string instance_json(const InstanceSpec& spec);

}  // namespace bb
