/* ballbodies - intersections of congruent balls: exact planar kernel,
 * Monte Carlo estimators, and randomized inequality verification suites.
 *
 * C API: opaque handles plus error codes. All returned strings and handles
 * are owned by the caller and released with the matching *_free function.
 */

#ifndef BALLBODIES_H
#define BALLBODIES_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bb_status {
    BB_OK = 0,
    BB_ERR_INVALID_ARGUMENT = 1,
    BB_ERR_INFEASIBLE = 2,
    BB_ERR_NO_CONVERGENCE = 3,
    BB_ERR_PARSE = 4,
    BB_ERR_INTERNAL = 5
} bb_status;

typedef struct bb_config bb_config;     /* finite point set with radius r */
typedef struct bb_region2d bb_region2d; /* planar arc polygon */

const char* bb_version(void);
const char* bb_status_name(bb_status status);
/* message from the most recent failing call on this thread */
const char* bb_last_error(void);

void bb_string_free(char* s);

/* ------------------------------------------------------------ configs --- */

bb_status bb_config_create(int dim, double r, const double* coords, size_t npoints,
                           bb_config** out);
bb_status bb_config_parse_json(const char* text, bb_config** out);
void bb_config_free(bb_config* cfg);

int bb_config_dim(const bb_config* cfg);
double bb_config_radius(const bb_config* cfg);
size_t bb_config_count(const bb_config* cfg);
bb_status bb_config_to_json(const bb_config* cfg, char** json_out);

/* circumball of the points (Welzl); center_out needs dim doubles */
bb_status bb_enclosing_ball(const bb_config* cfg, uint64_t seed, double* center_out,
                            double* radius_out);

/* ----------------------------------------------------- planar regions --- */

/* kind codes: 0 proper, 1 full disk, 2 single point, 3 empty */
bb_status bb_disk_intersection(const bb_config* cfg, bb_region2d** out);
bb_status bb_ball_hull_2d(const bb_config* cfg, bb_region2d** out);
void bb_region2d_free(bb_region2d* region);

int bb_region2d_kind(const bb_region2d* region);
bb_status bb_region2d_measures(const bb_region2d* region, double* area, double* perimeter,
                               double* inradius, double* circumradius);
bb_status bb_region2d_support(const bb_region2d* region, double ux, double uy, double* value);
bb_status bb_region2d_to_json(const bb_region2d* region, char** json_out);

/* ------------------------------------------------- shapes and measures --- */

/* intrinsic-volume profile {V_1, V_{d-1}, V_d} with provenance tags */
bb_status bb_lens_profile_json(int dim, double r, double rho, char** json_out);
bb_status bb_spindle_profile_json(int dim, double r, double lambda, char** json_out);

bb_status bb_mc_volume(const bb_config* cfg, uint64_t samples, uint64_t seed, double* value,
                       double* stderr_out);

/* measures bundle for any dimension (exact planar or Monte Carlo):
 * {"volume":..,"surface":..,"v1":..,"inradius":..,"circumradius_bound":..} */
bb_status bb_measures_json(const bb_config* cfg, const char* target, uint64_t samples,
                           uint64_t seed, char** json_out);

/* --------------------------------------------------- verification suites --- */

/* params_json keys (all optional): dim, n_max, trials, r_ratio_lo, r_ratio_hi,
 * samples, directions, seed, k, sphere_dim, epsilon, m_sites, kadets_n_max */
bb_status bb_suite_run(const char* suite_id, const char* params_json, char** report_json_out);
bb_status bb_suite_list(char** json_out);

/* params_json keys: conjecture (1|2), dim, k, iterations, seed */
bb_status bb_explore_run(const char* params_json, char** report_json_out);

bb_status bb_report_to_csv(const char* report_json, char** csv_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BALLBODIES_H */
