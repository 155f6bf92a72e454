#ifndef EXTCONG_EXTCONG_H
#define EXTCONG_EXTCONG_H

/* C interface to libextcong. Objects are opaque handles released with the
 * matching *_free function. Every call returns an xc_status; on failure the
 * message is available from xc_last_error() on the same thread. Results are
 * JSON documents in malloc'd strings released with xc_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define XC_API __declspec(dllexport)
#else
#define XC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum xc_status {
  XC_OK = 0,
  XC_INVALID_ARGUMENT,
  XC_SINGULAR_CURVE,
  XC_INVALID_CONDUCTOR,
  XC_BAD_REDUCTION,
  XC_PRIME_TOO_LARGE,
  XC_INVALID_WEIL_POLYNOMIAL,
  XC_MISMATCHED_FIELD,
  XC_REPEATED_ROOT,
  XC_EMPTY_SWEEP,
  XC_MISSING_PRIME,
  XC_PRECISION_MISMATCH,
  XC_PRECISION_BELOW_STURM,
  XC_MISSING_FORM,
  XC_NO_CONSTRAINT,
  XC_DIMENSION_MISMATCH,
  XC_PARSE_ERROR,
  XC_SCHEMA_ERROR,
  XC_LENGTH_MISMATCH,
  XC_IO_ERROR,
  XC_NULL_ARGUMENT,
  XC_INTERNAL_ERROR
} xc_status;

typedef struct xc_curve xc_curve;
typedef struct xc_curve_set xc_curve_set;
typedef struct xc_forms xc_forms;

/* CamelCase name, e.g. "NoConstraint". */
XC_API const char* xc_status_name(xc_status status);
XC_API const char* xc_last_error(void);
XC_API void xc_string_free(char* s);

/* "a1,a2,a3,a4,a6" or "label@path". */
XC_API xc_status xc_curve_parse(const char* spec, xc_curve** out);
XC_API void xc_curve_free(xc_curve* curve);

XC_API xc_status xc_curve_set_parse(const char* text, xc_curve_set** out);
XC_API xc_status xc_curve_set_load(const char* path, xc_curve_set** out);
XC_API size_t xc_curve_set_size(const xc_curve_set* set);
XC_API xc_status xc_curve_set_get(const xc_curve_set* set, const char* label, xc_curve** out);
XC_API xc_status xc_curve_set_serialize(const xc_curve_set* set, char** out);
XC_API void xc_curve_set_free(xc_curve_set* set);

XC_API xc_status xc_forms_parse(const char* json, xc_forms** out);
XC_API xc_status xc_forms_load(const char* path, xc_forms** out);
XC_API xc_status xc_forms_serialize(const xc_forms* forms, char** out);
/* Newforms of the curves with conductor dividing `level` plus translates. */
XC_API xc_status xc_forms_generate(const xc_curve_set* set, const char* level, size_t precision,
                                   const char* distinguished, xc_forms** out);
XC_API void xc_forms_free(xc_forms* forms);

XC_API xc_status xc_count(const xc_curve* curve, uint64_t p, char** out);

/* Polynomials as descending comma lists ("1,3,5"); D may be NULL (= 1). */
XC_API xc_status xc_milne(const char* fa, const char* fb, const char* q, const char* D,
                          char** out);

/* mask: "2MN", "MN" or "none". verify_n bounds the Hecke-table check. */
XC_API xc_status xc_bound(const xc_curve* a, const xc_curve* b, uint64_t p_max,
                          const char* mask, uint64_t verify_n, unsigned threads, char** out);

/* label may be NULL (distinguished form); against and restrict_to may be
 * NULL. restrict_to = M zeroes every a_n with gcd(n, M) > 1 first. */
XC_API xc_status xc_theta(const xc_forms* forms, const char* label, const char* modulus,
                          const char* against, unsigned ladder, const char* restrict_to,
                          char** out);

/* precision 0 selects the dataset precision. */
XC_API xc_status xc_modulus(const xc_forms* forms, const char* label, size_t precision,
                            int restricted, char** out);

XC_API xc_status xc_sturm(const char* level, unsigned weight, char** out);

XC_API xc_status xc_symsq(const xc_curve* curve, uint64_t n_max, size_t terms_shown, char** out);

/* Sweep plus modulus audit; label may be NULL, precision 0 = dataset's. */
XC_API xc_status xc_report(const xc_curve* a, const xc_curve* b, const xc_forms* forms,
                           const char* label, const char* d_A, uint64_t p_max, size_t precision,
                           unsigned threads, char** out);

#ifdef __cplusplus
}
#endif

#endif
