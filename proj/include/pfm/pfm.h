#ifndef PFM_PFM_H
#define PFM_PFM_H

#include <stddef.h>

#if defined(PFM_BUILDING_LIBRARY)
#define PFM_API __attribute__((visibility("default")))
#else
#define PFM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pfm_status {
    PFM_OK = 0,
    PFM_ERR_INVALID_ARGUMENT = 1,
    PFM_ERR_PRECONDITION = 2,
    PFM_ERR_NO_SOLUTION = 3,
    PFM_ERR_UNDERDETERMINED = 4,
    PFM_ERR_PARSE = 5,
    PFM_ERR_SCHEMA = 6,
    PFM_ERR_INVARIANT = 7,
    PFM_ERR_INTERNAL = 8
} pfm_status;

typedef enum pfm_period_method {
    PFM_PERIOD_CLOSED_FORM = 0,
    PFM_PERIOD_ENUMERATION = 1
} pfm_period_method;

typedef struct pfm_model pfm_model;
typedef struct pfm_series pfm_series;
typedef struct pfm_operator pfm_operator;

/* Message of the last failure on the calling thread; never NULL. */
PFM_API const char* pfm_last_error(void);
PFM_API const char* pfm_status_name(pfm_status status);
PFM_API const char* pfm_version(void);
/* Frees strings returned through char** out-parameters. */
PFM_API void pfm_string_free(char* s);

/* Models: "pfaffian", "grassmannian", or a JSON model description. */
PFM_API pfm_status pfm_model_preset(const char* name, pfm_model** out);
PFM_API pfm_status pfm_model_from_json(const char* text, pfm_model** out);
PFM_API pfm_status pfm_model_to_json(const pfm_model* model, char** out);
PFM_API void pfm_model_free(pfm_model* model);

/* Series of exact rationals; coefficients travel as "p/q" strings. */
PFM_API pfm_status pfm_period(const pfm_model* model, size_t order, pfm_period_method method, pfm_series** out);
PFM_API pfm_status pfm_series_from_json(const char* text, pfm_series** out);
PFM_API pfm_status pfm_series_to_json(const pfm_series* series, char** out);
PFM_API size_t pfm_series_order(const pfm_series* series);
PFM_API pfm_status pfm_series_coeff(const pfm_series* series, size_t k, char** out);
PFM_API void pfm_series_free(pfm_series* series);

PFM_API pfm_status pfm_fit_operator(const pfm_series* series, size_t order, size_t max_deg, pfm_operator** out);
PFM_API pfm_status pfm_operator_invert(const pfm_operator* op, long twist, pfm_operator** out);
PFM_API pfm_status pfm_operator_apply(const pfm_operator* op, const pfm_series* series, pfm_series** out);
PFM_API pfm_status pfm_operator_is_mum(const pfm_operator* op, int* out);
PFM_API pfm_status pfm_holomorphic_solution(const pfm_operator* op, size_t order, pfm_series** out);
PFM_API pfm_status pfm_operator_from_json(const char* text, pfm_operator** out);
PFM_API pfm_status pfm_operator_to_json(const pfm_operator* op, char** out);
PFM_API pfm_status pfm_operator_to_text(const pfm_operator* op, char** out);
PFM_API void pfm_operator_free(pfm_operator* op);

/*
 * Document-level entry points. options_json is an object with any of
 * model, model_text, point, order, period_order, operator_order, deg,
 * oracle, oracle_order, m, method, twist, degree_bound (NULL for defaults).
 * input_json is the previous stage's document, a bare series or a bare
 * operator; NULL when the stage needs none. checks_ok (nullable) receives
 * 1 when every check recorded in the document passed.
 */
PFM_API pfm_status pfm_stage(const char* stage, const char* options_json, const char* input_json, char** out_json,
                             int* checks_ok);
PFM_API pfm_status pfm_pipeline(const char* options_json, char** out_json, int* checks_ok);
PFM_API pfm_status pfm_render_text(const char* document_json, char** out_text);

#ifdef __cplusplus
}
#endif

#endif
