/* C interface to the valuation-cone library. All structured inputs and
 * outputs are JSON strings; configurations are held behind an opaque
 * handle. Every returned string is heap-allocated and owned by the
 * caller; release it with vc_string_free. */
#ifndef VALCONE_VALCONE_H
#define VALCONE_VALCONE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct vc_config vc_config;

/* Status codes, aligned with the CLI exit codes. */
enum {
  VC_OK = 0,
  VC_ERR_INPUT = 2,      /* parse error or invalid configuration */
  VC_ERR_UNSUPPORTED = 3 /* e.g. kappa boundary over finite characteristic */
};

const char* vc_version(void);

/* Parses and validates a configuration document. Returns NULL on failure
 * and fills *err with a diagnostic (may be NULL if unwanted). */
vc_config* vc_config_parse(const char* json, char** err);
void vc_config_free(vc_config* config);

/* Invariants report: contact values, proximity matrix, divisor family. */
int vc_analyze(const vc_config* config, char** out_json, char** err);

/* Theorem deciders; characteristic is that of the intended ground field
 * (0 = characteristic zero). */
int vc_decide(const vc_config* config, unsigned characteristic, char** out_json, char** err);

/* Dual graph in DOT format. */
int vc_export_dot(const vc_config* config, char** out, char** err);

/* Single Example-3 family report for the pair (a, r). */
int vc_family(long a, long r, char** out_json, char** err);

/* Family sweep over count (a, r) pairs; inadmissible pairs are reported
 * as skipped entries, not errors. */
int vc_sweep(const long* a, const long* r, int count, char** out_json, char** err);

/* Evaluates nu on an affine polynomial in x, y (sparse monomial syntax)
 * under a seeded realization. field_prime = 0 selects the rationals. */
int vc_eval(const vc_config* config, const char* poly, unsigned long field_prime,
            uint64_t seed, char** out_json, char** err);

/* Searches for a polynomial with nu > 0 (positive_mode != 0) or a
 * nonconstant one with nu = 0; budget <= 0 selects the default 2*d_m. */
int vc_witness(const vc_config* config, int positive_mode, long budget,
               unsigned long field_prime, uint64_t seed, char** out_json, char** err);

void vc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* VALCONE_VALCONE_H */
