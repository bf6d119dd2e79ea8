/* SPDX-License-Identifier: MIT */
#ifndef RBMONO_H
#define RBMONO_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RBM_API __declspec(dllexport)
#else
#define RBM_API __attribute__((visibility("default")))
#endif

typedef enum rbm_status {
    RBM_OK = 0,
    RBM_VERIFICATION_FAILED = 1,
    RBM_INVALID_PARAMS = 2,
    RBM_COVERAGE = 3,
    RBM_IO = 4,   /* malformed JSON, schema mismatch, unreadable file */
    RBM_INTERNAL = 5
} rbm_status;

typedef struct rbm_spec rbm_spec;
typedef struct rbm_operator rbm_operator;
typedef struct rbm_report rbm_report;

/* Message for the last non-OK status on the calling thread; owned by the library. */
RBM_API const char* rbm_last_error(void);
/* Frees strings returned through char** out-parameters. */
RBM_API void rbm_string_free(char* s);

/* ---- family specs ---- */
RBM_API rbm_status rbm_spec_from_json(const char* json, rbm_spec** out);
RBM_API rbm_status rbm_spec_to_json(const rbm_spec* spec, char** out);
/* RBM_OK when valid, RBM_INVALID_PARAMS with the reason in rbm_last_error otherwise. */
RBM_API rbm_status rbm_spec_validate(const rbm_spec* spec);
/* options_json may be NULL; keys: ctx, r, c, p_x, p_y, d, delta, seed_a, seed_b. */
RBM_API rbm_status rbm_preset(const char* name, const char* options_json, rbm_spec** out);
/* JSON array of preset names. */
RBM_API rbm_status rbm_preset_names(char** out);
RBM_API void rbm_spec_free(rbm_spec* spec);

/* ---- operators ---- */
RBM_API rbm_status rbm_operator_build(const rbm_spec* spec, rbm_operator** out);
RBM_API rbm_status rbm_operator_from_table_json(const char* json, rbm_operator** out);
/* Coefficient table up to total degree `degree`. */
RBM_API rbm_status rbm_operator_table_json(const rbm_operator* op, long degree, char** out);
RBM_API rbm_status rbm_operator_scale(const rbm_operator* op, const char* scalar, rbm_operator** out);
RBM_API rbm_status rbm_operator_swap(const rbm_operator* op, rbm_operator** out);
RBM_API void rbm_operator_free(rbm_operator* op);

/* ---- verification ---- */
/* kind: "rb0" or "averaging". */
RBM_API rbm_status rbm_check(const rbm_operator* op, const char* kind, long max_degree, unsigned jobs,
                             rbm_report** out);
/* relation_json: {"kind": "case-ii"|"case-i"|"case-iii"|"reciprocal", "r", "c", "p_x", "p_y"}. */
RBM_API rbm_status rbm_check_relation(const rbm_operator* op, const char* relation_json, long max_index,
                                      rbm_report** out);
RBM_API int rbm_report_passed(const rbm_report* report);
RBM_API rbm_status rbm_report_json(const rbm_report* report, char** out);
RBM_API void rbm_report_free(rbm_report* report);

/* ---- classification, recurrences, lattice ---- */
RBM_API rbm_status rbm_classify_json(const rbm_operator* table, long coverage_degree, char** out);
/* request_json: {"kind": "single"|"two-index"|"k-additive"|"k-shifted"|"support-search", "params": {...},
   "upto": n, "verify_to": N}. Output holds the generated values and the verifier report;
   RBM_VERIFICATION_FAILED when the verifier fails. */
RBM_API rbm_status rbm_recurrence_json(const char* request_json, char** out);
RBM_API rbm_status rbm_lattice_json(const rbm_spec* spec, long x_max, long y_max, char** out);

#ifdef __cplusplus
}
#endif

#endif
