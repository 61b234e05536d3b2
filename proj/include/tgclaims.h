/* C interface to the claim-extremes library: transmuted severities over a
 * shared baseline, Bernoulli occurrence, exact extreme-claim distributions,
 * and scenario-level order/condition checks.
 *
 * Conventions: every function that can fail returns a tgc_status and writes
 * results through out-parameters. On failure the out-parameters are left
 * untouched and tgc_last_error() describes the problem (thread-local).
 * Objects returned through create/load functions are owned by the caller
 * and released with the matching _free function; _free accepts NULL.
 */

#ifndef TGCLAIMS_H
#define TGCLAIMS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tgc_status {
  TGC_OK = 0,
  TGC_ERR_INVALID = 1,  /* invalid arguments or scenario contents */
  TGC_ERR_DOMAIN = 2,   /* evaluation outside a function's domain */
  TGC_ERR_PARSE = 3,    /* malformed scenario JSON */
  TGC_ERR_IO = 4,       /* file could not be read or written */
  TGC_ERR_INTERNAL = 5
} tgc_status;

typedef struct tgc_baseline tgc_baseline;
typedef struct tgc_portfolio tgc_portfolio;
typedef struct tgc_scenario tgc_scenario;
typedef struct tgc_report tgc_report;

/* Message for the most recent failure on this thread; never NULL. */
const char* tgc_last_error(void);

/* --- baselines ------------------------------------------------------- */

tgc_status tgc_baseline_exponential(double mean, tgc_baseline** out);
tgc_status tgc_baseline_weibull(double shape, double scale, tgc_baseline** out);
void tgc_baseline_free(tgc_baseline* b);

tgc_status tgc_base_cdf(const tgc_baseline* b, double x, double* out);
tgc_status tgc_base_pdf(const tgc_baseline* b, double x, double* out);
tgc_status tgc_base_quantile(const tgc_baseline* b, double u, double* out);
tgc_status tgc_base_hazard(const tgc_baseline* b, double x, double* out);
/* is_dfr: writes 1 or 0. */
tgc_status tgc_base_is_dfr(const tgc_baseline* b, int* out);

/* --- transmuted severities (lambda in [-1, 1]) ------------------------ */

tgc_status tgc_tg_cdf(const tgc_baseline* b, double lambda, double x, double* out);
tgc_status tgc_tg_sf(const tgc_baseline* b, double lambda, double x, double* out);
tgc_status tgc_tg_pdf(const tgc_baseline* b, double lambda, double x, double* out);
tgc_status tgc_tg_hazard(const tgc_baseline* b, double lambda, double x, double* out);
tgc_status tgc_tg_quantile(const tgc_baseline* b, double lambda, double u, double* out);

/* --- portfolios and extreme-claim distributions ----------------------- */

/* lambdas in [-1,1], probs in (0,1], both of length n >= 1. */
tgc_status tgc_portfolio_create(const tgc_baseline* b, const double* lambdas,
                                const double* probs, size_t n,
                                tgc_portfolio** out);
void tgc_portfolio_free(tgc_portfolio* p);

tgc_status tgc_largest_cdf(const tgc_portfolio* p, double x, double* out);
tgc_status tgc_largest_reversed_hazard(const tgc_portfolio* p, double x,
                                       double* out);
tgc_status tgc_smallest_sf(const tgc_portfolio* p, double x, double* out);
/* Continuous-part hazard plus the separate atom mass at zero. */
tgc_status tgc_smallest_hazard(const tgc_portfolio* p, double x, double* rate,
                               double* atom);
/* largest: nonzero selects the largest claim, zero the smallest. */
tgc_status tgc_extreme_atom(const tgc_portfolio* p, int largest, double* out);
tgc_status tgc_extreme_quantile(const tgc_portfolio* p, int largest, double u,
                                double* out);

/* --- scenarios and batch commands ------------------------------------- */

tgc_status tgc_scenario_load(const char* path, tgc_scenario** out);
tgc_status tgc_scenario_parse(const char* json_text, tgc_scenario** out);
void tgc_scenario_free(tgc_scenario* s);
tgc_status tgc_scenario_set_grid_points(tgc_scenario* s, int point_count);
tgc_status tgc_scenario_set_seed(tgc_scenario* s, uint64_t seed);

/* theorem: largest-chain | largest-rh | smallest-st | smallest-hr |
 *          smallest-disp | bounds */
tgc_status tgc_run_check(const tgc_scenario* s, const char* theorem,
                         tgc_report** out);
/* order: st | hr | rh | disp */
tgc_status tgc_run_verify(const tgc_scenario* s, const char* order,
                          tgc_report** out);
/* Writes CSV curve files into out_dir (which must exist). */
tgc_status tgc_run_curves(const tgc_scenario* s, const char* out_dir,
                          tgc_report** out);
tgc_status tgc_run_simulate(const tgc_scenario* s, uint64_t count,
                            tgc_report** out);

/* Strings remain valid until the report is freed. */
const char* tgc_report_json(const tgc_report* r);
const char* tgc_report_text(const tgc_report* r);
/* 1 when every requested condition/check holds, else 0. */
int tgc_report_satisfied(const tgc_report* r);
void tgc_report_free(tgc_report* r);

#ifdef __cplusplus
}
#endif

#endif /* TGCLAIMS_H */
