/* SPDX-License-Identifier: Apache-2.0 */
#ifndef HPCALC_H
#define HPCALC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  HPC_OK = 0,
  HPC_ERR_CONFIG,
  HPC_ERR_DOMAIN,
  HPC_ERR_ACCURACY,
  HPC_ERR_TRUNCATION,
  HPC_ERR_REJECTED,
  HPC_ERR_SINGULAR,
  HPC_ERR_IO,
  HPC_ERR_INTERNAL
} hpc_status;

typedef struct hpc_signal hpc_signal;
typedef struct hpc_generator hpc_generator;
typedef struct hpc_certificate hpc_certificate;

const char* hpc_status_string(hpc_status s);
/* Message of the last failure on the calling thread; "" if none. */
const char* hpc_last_error(void);
/* Measured quantity attached to the last failure (residual, tail, ...), or 0. */
double hpc_last_measured(void);

/* Strings returned through char** are owned by the caller. */
void hpc_string_free(char* s);

/* Signals. re/im hold n samples on t_k = t0 + k dt. */
hpc_status hpc_signal_create(size_t n, double dt, double t0, const double* re, const double* im, hpc_signal** out);
hpc_status hpc_signal_load(const char* path, hpc_signal** out);
hpc_status hpc_signal_save(const hpc_signal* s, const char* path);
size_t hpc_signal_size(const hpc_signal* s);
hpc_status hpc_signal_sample(const hpc_signal* s, size_t k, double* re, double* im);
void hpc_signal_free(hpc_signal* s);

/* Generators. Entries are row-major d*d. t_max <= 0 and samples <= 0 pick defaults. */
hpc_status hpc_generator_create(int d, const double* re, const double* im, double t_max, int samples,
                                hpc_generator** out);
hpc_status hpc_generator_load(const char* path, double t_max, int samples, hpc_generator** out);
int hpc_generator_dim(const hpc_generator* g);
double hpc_generator_c_bound(const hpc_generator* g);
double hpc_generator_margin(const hpc_generator* g);
void hpc_generator_free(hpc_generator* g);

hpc_status hpc_certificate_load(const char* path, hpc_certificate** out);
hpc_status hpc_certificate_save(const hpc_certificate* c, const char* path);
double hpc_certificate_value(const hpc_certificate* c);
size_t hpc_certificate_pairs(const hpc_certificate* c);
void hpc_certificate_free(hpc_certificate* c);

/* Calculus results are JSON objects {operation, inputs_digest, matrix, bound, residuals};
   matrix is a list of rows of [re, im] pairs. */
hpc_status hpc_hille_phillips(const hpc_generator* g, const hpc_signal* density, char** result_json);
/* symbol_json: {"kind": "rational", "mu": [re, im], "m": 2}
              | {"kind": "exp_polynomial", "terms": [[c_re, c_im, k, a_re, a_im], ...]}
              | {"kind": "laplace", "signal": "path"} | {"kind": "boundary", "signal": "path"}
              | {"kind": "product", "factors": [symbol, ...]} */
hpc_status hpc_halfplane_eval(const hpc_generator* g, const char* symbol_json, double beta, char** result_json);
hpc_status hpc_regularized_eval(const hpc_generator* g, const char* symbol_json, double mu_re, double mu_im,
                                char** result_json);
hpc_status hpc_rho0(const hpc_generator* g, const hpc_certificate* c, char** result_json);
/* delta: low-frequency cut of the unit certificate. */
hpc_status hpc_rho_ext(const hpc_generator* g, const hpc_certificate* c, double delta, char** result_json);

hpc_status hpc_besov_norm(const hpc_signal* F, int sharp, int k_min, int k_max, char** result_json);
hpc_status hpc_a_cert(const hpc_signal* F, int k_min, int k_max, hpc_certificate** out);
hpc_status hpc_factor_h1(const hpc_signal* h, double factor_tol, hpc_signal** w, hpc_signal** v, char** result_json);

/* config_text: "key = value" lines. report_json and csv may be NULL. */
hpc_status hpc_verify(const char* name, const char* config_text, char** report_json, char** csv, int* all_pass);
hpc_status hpc_experiment(const char* name, const char* config_text, char** report_json, char** csv, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif
