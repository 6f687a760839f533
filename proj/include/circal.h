/* circal - a calculus of circular handle decompositions.
 *
 * C interface to the circal core. All objects are opaque handles created and
 * released through this API; every fallible call returns a circal_status and
 * leaves a message retrievable via circal_last_error() on failure. Output
 * strings are heap-allocated and must be released with circal_string_free();
 * const char* results point into the owning object and stay valid until it
 * is freed.
 *
 * Width multisets travel as int32 arrays sorted non-increasingly. Array
 * outputs use the usual two-call pattern: pass entries == NULL to query the
 * length, then call again with a large enough buffer.
 */

#ifndef CIRCAL_H
#define CIRCAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CIRCAL_API __declspec(dllexport)
#else
#define CIRCAL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct circal_decomposition circal_decomposition;
typedef struct circal_report circal_report;
typedef struct circal_knot_table circal_knot_table;

typedef enum circal_status {
  CIRCAL_OK = 0,
  CIRCAL_ERROR_ARGUMENT = 1, /* null handle, bad index, buffer too small */
  CIRCAL_ERROR_PARSE = 2,    /* malformed decomposition file or knot table */
  CIRCAL_ERROR_DOMAIN = 3,   /* violated precondition or invalid decomposition */
  CIRCAL_ERROR_INTERNAL = 4
} circal_status;

/* Message for the most recent failure on this thread. */
CIRCAL_API const char* circal_last_error(void);

CIRCAL_API void circal_string_free(char* text);

/* ---- decompositions ---------------------------------------------------- */

CIRCAL_API circal_status circal_decomposition_parse(const char* text,
                                                    circal_decomposition** out);
CIRCAL_API circal_status circal_decomposition_serialize(const circal_decomposition* d,
                                                        char** out_text);
CIRCAL_API void circal_decomposition_free(circal_decomposition* d);

CIRCAL_API size_t circal_provenance_count(const circal_decomposition* d);
CIRCAL_API const char* circal_provenance_line(const circal_decomposition* d, size_t index);

/* ---- validation --------------------------------------------------------- */

CIRCAL_API circal_status circal_validate(const circal_decomposition* d, circal_report** out);
CIRCAL_API int circal_report_valid(const circal_report* r);
CIRCAL_API size_t circal_report_error_count(const circal_report* r);
CIRCAL_API size_t circal_report_warning_count(const circal_report* r);
CIRCAL_API const char* circal_report_error(const circal_report* r, size_t index);
CIRCAL_API const char* circal_report_warning(const circal_report* r, size_t index);
CIRCAL_API void circal_report_free(circal_report* r);

/* ---- width -------------------------------------------------------------- */

CIRCAL_API circal_status circal_width(const circal_decomposition* d, int32_t* entries,
                                      size_t capacity, size_t* out_count);

/* Lexicographic comparison of two non-increasing multisets; a proper prefix
 * sorts first. Returns -1, 0 or 1. */
CIRCAL_API int circal_compare_width(const int32_t* a, size_t a_count, const int32_t* b,
                                    size_t b_count);

/* ---- structure ----------------------------------------------------------- */

CIRCAL_API circal_status circal_canonical_form(const circal_decomposition* d,
                                               circal_decomposition** out);

/* out_counts receives {1-handles, 2-handles, 3-handles}. */
CIRCAL_API circal_status circal_morse_stats(const circal_decomposition* d,
                                            int32_t out_counts[3]);

/* ---- classification (knot-exterior mode) -------------------------------- */

enum {
  CIRCAL_FORM_FIBERED = 0,
  CIRCAL_FORM_ALMOST_FIBERED = 1,
  CIRCAL_FORM_MULTI_STAGE = 2
};

typedef struct circal_classification {
  int32_t form;
  int32_t closed_thin_component;
  int32_t multiple_thin_surfaces;
  int32_t locally_thin_asserted;
} circal_classification;

CIRCAL_API circal_status circal_classify(const circal_decomposition* d,
                                         int assert_locally_thin,
                                         circal_classification* out);
CIRCAL_API const char* circal_form_name(int32_t form);

/* ---- width-decreasing rewrites ------------------------------------------ */

CIRCAL_API circal_status circal_weak_reduction_count(const circal_decomposition* d,
                                                     int32_t stage, size_t* out_count);
CIRCAL_API circal_status circal_weak_reduction_describe(const circal_decomposition* d,
                                                        int32_t stage, size_t index,
                                                        char** out_text);
CIRCAL_API circal_status circal_apply_weak_reduction(const circal_decomposition* d,
                                                     int32_t stage, size_t index,
                                                     circal_decomposition** out);
CIRCAL_API circal_status circal_remove_trivial_stage(const circal_decomposition* d,
                                                     int32_t stage,
                                                     circal_decomposition** out);
CIRCAL_API circal_status circal_remove_parallel_region(const circal_decomposition* d,
                                                       int32_t thin_from, int32_t thin_to,
                                                       const char* isotopy_assertion,
                                                       circal_decomposition** out);

/* Bounded breadth-first search over the rewrite graph. The result is a
 * formal-model certificate: rewrites need not be realizable by isotopies of
 * the underlying manifold. out_trace (optional) receives the newline-joined
 * rewrite path; out_exhausted (optional) is nonzero when the whole graph fit
 * within the budget. */
CIRCAL_API circal_status circal_thin_search(const circal_decomposition* d, int64_t budget,
                                            circal_decomposition** out_best, char** out_trace,
                                            int64_t* out_nodes_expanded, int* out_exhausted);

/* ---- knot operations ----------------------------------------------------- */

CIRCAL_API circal_status circal_connected_sum(const circal_decomposition* left,
                                              const circal_decomposition* right,
                                              const char* left_name, const char* right_name,
                                              circal_decomposition** out);
CIRCAL_API circal_status circal_boundary_sum(const circal_decomposition* left,
                                             const circal_decomposition* right,
                                             const char* left_name, const char* right_name,
                                             circal_decomposition** out);
CIRCAL_API circal_status circal_bound_csum(const circal_decomposition* left,
                                           const circal_decomposition* right, int32_t* entries,
                                           size_t capacity, size_t* out_count);
CIRCAL_API circal_status circal_bound_bsum(const circal_decomposition* left,
                                           const circal_decomposition* right, int32_t* entries,
                                           size_t capacity, size_t* out_count);

/* ---- knot tables ---------------------------------------------------------- */

CIRCAL_API circal_status circal_knot_table_parse(const char* csv, circal_knot_table** out);
CIRCAL_API void circal_knot_table_free(circal_knot_table* table);
CIRCAL_API size_t circal_knot_table_count(const circal_knot_table* table);
CIRCAL_API circal_status circal_knot_table_record(const circal_knot_table* table, size_t index,
                                                  const char** out_name, int32_t* out_genus,
                                                  int32_t* out_fibered,
                                                  int32_t* out_has_handle_number,
                                                  int32_t* out_handle_number);
CIRCAL_API circal_status circal_knot_decomposition(const circal_knot_table* table,
                                                   const char* name,
                                                   circal_decomposition** out);

#ifdef __cplusplus
}
#endif

#endif /* CIRCAL_H */
