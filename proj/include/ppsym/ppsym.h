#ifndef PPSYM_PPSYM_H
#define PPSYM_PPSYM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PPSYM_API __declspec(dllexport)
#elif defined(__GNUC__)
#define PPSYM_API __attribute__((visibility("default")))
#else
#define PPSYM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ppsym_status {
  PPSYM_OK = 0,
  PPSYM_ERR_ARGUMENT = 1,      /* null handle, bad option value */
  PPSYM_ERR_PARSE = 2,         /* expression or vector-field syntax */
  PPSYM_ERR_UNKNOWN_CLASS = 3,
  PPSYM_ERR_PARAMETER = 4,     /* unknown parameter, violated constraint, division by zero */
  PPSYM_ERR_NUMERIC = 5,       /* evaluation failed at a sample point */
  PPSYM_ERR_INTERNAL = 6
} ppsym_status;

typedef struct ppsym_expr ppsym_expr;
typedef struct ppsym_config ppsym_config;
typedef struct ppsym_report ppsym_report;

/* Borrowed view of one claim; strings live as long as the report. */
typedef struct ppsym_claim {
  const char* class_id;
  const char* kind;
  const char* subject;
  const char* status; /* "pass", "fail", "amended-pass" */
  double residual;
  const char* detail;
  int has_witness_value;
  double witness_value;
  long discrepancy; /* -1 when none */
} ppsym_claim;

PPSYM_API const char* ppsym_version(void);

/* Message of the last failed call on this thread; "" after a success. */
PPSYM_API const char* ppsym_last_error(void);
/* 1-based character offset of the last parse error, 0 otherwise. */
PPSYM_API size_t ppsym_last_error_offset(void);

/* Frees strings returned through char** out-parameters. */
PPSYM_API void ppsym_string_free(char* s);

/* Expressions */
PPSYM_API ppsym_status ppsym_expr_parse(const char* text, ppsym_expr** out);
PPSYM_API ppsym_status ppsym_expr_to_string(const ppsym_expr* e, char** out);
PPSYM_API ppsym_status ppsym_expr_diff(const ppsym_expr* e, const char* var, ppsym_expr** out);
PPSYM_API ppsym_status ppsym_expr_simplify(const ppsym_expr* e, ppsym_expr** out);
PPSYM_API ppsym_status ppsym_expr_eval(const ppsym_expr* e, const char* const* names, const double* values, size_t n,
                                       double* out);
PPSYM_API void ppsym_expr_free(ppsym_expr* e);

/* Run configuration; defaults are seed 42, 32 samples, tol_abs 1e-12, tol_rel 1e-9, Noether checks on. */
PPSYM_API ppsym_status ppsym_config_new(ppsym_config** out);
PPSYM_API void ppsym_config_free(ppsym_config* c);
PPSYM_API ppsym_status ppsym_config_set_seed(ppsym_config* c, uint64_t seed);
PPSYM_API ppsym_status ppsym_config_set_samples(ppsym_config* c, size_t samples);
PPSYM_API ppsym_status ppsym_config_set_tolerance(ppsym_config* c, double tol_abs, double tol_rel);
PPSYM_API ppsym_status ppsym_config_set_noether(ppsym_config* c, int enabled);
PPSYM_API ppsym_status ppsym_config_set_threads(ppsym_config* c, unsigned threads);
/* value is an exact rational: "3/5", "-2", "0.25" */
PPSYM_API ppsym_status ppsym_config_set_param(ppsym_config* c, const char* name, const char* value);

/* Catalog */
PPSYM_API size_t ppsym_class_count(void);
PPSYM_API const char* ppsym_class_id(size_t index); /* NULL when out of range */
PPSYM_API ppsym_status ppsym_normalize_class_id(const char* id, char** out);
PPSYM_API ppsym_status ppsym_catalog_json(char** out);

/* Verification. n == 0 verifies the whole catalog. */
PPSYM_API ppsym_status ppsym_verify(const char* const* ids, size_t n, const ppsym_config* c, ppsym_report** out);
/* xi is "[e_u, e_v, e_y, e_z]"; psi may be NULL or "" to use the computed factor. */
PPSYM_API ppsym_status ppsym_classify(const char* H, const char* xi, const char* psi, const ppsym_config* c,
                                      ppsym_report** out);
PPSYM_API ppsym_status ppsym_kg_check(const char* H, const char* xi, const char* psi, const char* V,
                                      const ppsym_config* c, ppsym_report** out);

/* Copy keeping only claims of one kind ("commutator", "kg-potential", ...) and the discrepancies they cite. */
PPSYM_API ppsym_status ppsym_report_select(const ppsym_report* r, const char* kind, ppsym_report** out);
PPSYM_API ppsym_status ppsym_report_json(const ppsym_report* r, char** out);
PPSYM_API ppsym_status ppsym_report_text(const ppsym_report* r, char** out);
PPSYM_API ppsym_status ppsym_report_summary(const ppsym_report* r, size_t* pass, size_t* fail, size_t* amended);
/* Failed claims whose evaluation itself broke down (no witness value). */
PPSYM_API size_t ppsym_report_numeric_failures(const ppsym_report* r);
PPSYM_API size_t ppsym_report_claim_count(const ppsym_report* r);
PPSYM_API ppsym_status ppsym_report_claim(const ppsym_report* r, size_t index, ppsym_claim* out);
PPSYM_API size_t ppsym_report_discrepancy_count(const ppsym_report* r);
PPSYM_API void ppsym_report_free(ppsym_report* r);

#ifdef __cplusplus
}
#endif

#endif
