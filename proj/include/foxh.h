/* foxh: Fox H-function contour evaluation and identity verification.
 *
 * C interface to the shared library. All entry points return a foxh_status;
 * on failure foxh_last_error() carries a thread-local diagnostic. Handles
 * are opaque and freed with the matching *_free call. Strings returned
 * through char** are heap-allocated; release them with foxh_string_free.
 */

#ifndef FOXH_H
#define FOXH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum foxh_status {
  FOXH_OK = 0,
  FOXH_ERR_INDEX_OUT_OF_RANGE = 1,
  FOXH_ERR_NON_POSITIVE_WEIGHT = 2,
  FOXH_ERR_NO_SEPARATING_CONTOUR = 3,
  FOXH_ERR_POLE_AT_NON_POSITIVE_INTEGER = 4,
  FOXH_ERR_POLE_AT_INTEGER = 5,
  FOXH_ERR_POLE_AT_HALF_INTEGER = 6,
  FOXH_ERR_POLE_IN_FACTOR = 7,
  FOXH_ERR_POLE_OF_NUMERATOR = 8,
  FOXH_ERR_OUTSIDE_CONVERGENCE_SECTOR = 9,
  FOXH_ERR_BUDGET_EXCEEDED = 10,
  FOXH_ERR_LOGARITHMIC_CASE = 11,
  FOXH_ERR_SERIES_DIVERGED = 12,
  FOXH_ERR_OVERFLOW = 13,
  FOXH_ERR_INVALID_PARAMS = 14,
  FOXH_ERR_SPEC_VALIDATION_FAILED = 15,
  FOXH_ERR_EMPTY_ADMISSIBLE_REGION = 16,
  FOXH_ERR_POLE_AT_S = 17,
  FOXH_ERR_PARSE = 18,
  FOXH_ERR_INVALID_ARGUMENT = 19,
  FOXH_ERR_UNSUPPORTED = 20,
  FOXH_ERR_INTERNAL = 21
} foxh_status;

/* Validated H-function parameter spec. */
typedef struct foxh_spec foxh_spec;

/* Built identity case (weighted-term lists for both sides). */
typedef struct foxh_identity foxh_identity;

typedef struct foxh_options {
  double rel_tol;     /* quadrature / series stopping tolerance */
  int max_nodes;      /* contour node budget per evaluation */
  double tail_safety; /* truncation safety factor */
} foxh_options;

/* method: 0 = contour, 1 = series, 2 = closed_form */
typedef struct foxh_result {
  double value_re;
  double value_im;
  double error_estimate;
  int method;
  int nodes_used;
} foxh_result;

const char* foxh_version(void);
const char* foxh_last_error(void);
const char* foxh_status_name(foxh_status status);
void foxh_string_free(char* s);
void foxh_options_default(foxh_options* opts);

/* --- specs ---------------------------------------------------------- */

/* Rows are [coeff_re, coeff_im, weight]; validation runs on creation. */
foxh_status foxh_spec_create(int m, int n, const double* upper, size_t p,
                             const double* lower, size_t q, foxh_spec** out);
/* {"m":int,"n":int,"upper":[[re,im,weight],...],"lower":[[re,im,weight],...]} */
foxh_status foxh_spec_from_json(const char* json, foxh_spec** out);
foxh_status foxh_spec_to_json(const foxh_spec* spec, char** json_out);
void foxh_spec_free(foxh_spec* spec);

foxh_status foxh_spec_profile(const foxh_spec* spec, double* a_star,
                              double* c_min, double* c_max,
                              double* sector_halfwidth, int* simple_poles);
/* Buffers hold up to count interleaved (re, im) pairs per side. */
foxh_status foxh_spec_poles(const foxh_spec* spec, int count, double* left,
                            size_t* left_count, double* right,
                            size_t* right_count);

/* --- gamma kernel ---------------------------------------------------- */

foxh_status foxh_log_gamma(double z_re, double z_im, double* log_modulus,
                           double* phase);
foxh_status foxh_reflection_sin(double z_re, double z_im, double* out_re,
                                double* out_im);
foxh_status foxh_reflection_cos(double z_re, double z_im, double* out_re,
                                double* out_im);
/* lhs_log / rhs_log receive {log_modulus, phase} of the two sides. */
foxh_status foxh_duplication_split(double beta_re, double beta_im, double delta,
                                   double s_re, double s_im, double lhs_log[2],
                                   double rhs_log[2]);
foxh_status foxh_theta(const foxh_spec* spec, double s_re, double s_im,
                       double* log_modulus, double* phase, int* is_zero);
foxh_status foxh_integrand(const foxh_spec* spec, double modulus,
                           double arg_phase, double s_re, double s_im,
                           double* log_modulus, double* phase, int* is_zero);

/* --- evaluation ------------------------------------------------------ */

foxh_status foxh_eval_contour(const foxh_spec* spec, double modulus,
                              double phase, const foxh_options* opts,
                              foxh_result* out);
foxh_status foxh_eval_series(const foxh_spec* spec, double modulus,
                             double phase, const foxh_options* opts,
                             foxh_result* out);
/* tag_out receives a static string ("exp", "binomial") or NULL when the
 * spec has no closed form. */
foxh_status foxh_closed_form_tag(const foxh_spec* spec, const char** tag_out);
foxh_status foxh_closed_form_eval(const foxh_spec* spec, double modulus,
                                  double phase, double* out_re,
                                  double* out_im);

/* --- built-in reference catalog -------------------------------------- */

size_t foxh_catalog_size(void);
/* name receives a static string; *out must be freed with foxh_spec_free. */
foxh_status foxh_catalog_entry(size_t index, const char** name,
                               foxh_spec** out);

/* --- identities ------------------------------------------------------ */

/* id is one of "R1981", "RMULTI", "MAIN", "G41", "G42", "G43". */
foxh_status foxh_identity_build(const char* id, double alpha, double beta,
                                double lambda, double delta,
                                const foxh_spec* base, foxh_identity** out);
void foxh_identity_free(foxh_identity* ident);
foxh_status foxh_identity_terms(const foxh_identity* ident, int* lhs_terms,
                                int* rhs_terms);
/* note receives a static-lifetime string owned by the identity handle. */
foxh_status foxh_identity_note(const foxh_identity* ident, const char** note);
foxh_status foxh_identity_sector(const foxh_identity* ident, double* max_phase,
                                 double* min_modulus, double* max_modulus);

/* Evaluates both sides on the modulus x phase grid (canonically sorted) and
 * writes the full verification report as JSON. */
foxh_status foxh_identity_verify_json(const foxh_identity* ident,
                                      const double* moduli, size_t n_moduli,
                                      const double* phases, size_t n_phases,
                                      double tol, const foxh_options* opts,
                                      int* pass, char** report_json);

/* Worst pointwise kernel residual on a grid_n x grid_n s-grid; defined for
 * MAIN (derivation residual) and G41/G42/G43 (kernel equality). */
foxh_status foxh_identity_kernel_check(const foxh_identity* ident,
                                       double modulus, double phase,
                                       int grid_n, double im_max,
                                       double* worst_rel);

/* Derivation residual A - B at one s (no quadrature); rel receives
 * |A - B| / max(|A|, |B|). */
foxh_status foxh_integrand_residual(double alpha, double beta, double lambda,
                                    double delta, const foxh_spec* base,
                                    double modulus, double phase, double s_re,
                                    double s_im, double* out_re,
                                    double* out_im, double* rel);

/* --- gamma-identity suite -------------------------------------------- */

/* Seeded property sweep; fault != 0 perturbs one residual (test hook). */
foxh_status foxh_gamma_suite(uint64_t seed, int count, int fault, int* pass,
                             char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* FOXH_H */
