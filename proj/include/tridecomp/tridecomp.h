/*
 * C interface to the triangle-decomposition certificate checker.
 *
 * Every object is an opaque handle released with its matching *_free
 * function. Functions return TD_OK or an error code; td_last_error() then
 * describes the failure (per thread). Strings returned through `char**` are
 * heap-allocated and must be released with td_string_free.
 */
#ifndef TRIDECOMP_H
#define TRIDECOMP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TRIDECOMP_BUILDING)
#    define TD_API __declspec(dllexport)
#  else
#    define TD_API __declspec(dllimport)
#  endif
#else
#  define TD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum td_status {
  TD_OK = 0,
  TD_ERR_INVALID_ARGUMENT = 1,
  TD_ERR_SIZE_EXCEEDED = 2,
  TD_ERR_PARSE = 3,
  TD_ERR_IO = 4,
  TD_ERR_INTERNAL = 5,
  TD_ERR_NULL_POINTER = 6
} td_status;

typedef struct td_graph td_graph;
typedef struct td_graph_list td_graph_list;
typedef struct td_matrix td_matrix;
typedef struct td_report td_report;
typedef struct td_decomposition td_decomposition;

TD_API const char* td_version(void);
TD_API const char* td_last_error(void);
TD_API const char* td_status_name(td_status status);
TD_API void td_string_free(char* s);

/* Graphs */
TD_API td_status td_graph_from_graph6(const char* text, td_graph** out);
TD_API td_status td_graph_to_graph6(const td_graph* g, char** out);
TD_API td_status td_graph_order(const td_graph* g, int* out);
TD_API td_status td_graph_edge_count(const td_graph* g, int* out);
/* Writes the canonical graph6 certificate (at most 12 vertices). */
TD_API td_status td_graph_canonical(const td_graph* g, char** out);
TD_API void td_graph_free(td_graph* g);

/* Graph lists: graph6 files and isomorphism-class enumeration (1 <= n <= 8). */
TD_API td_status td_graph_list_read_file(const char* path, td_graph_list** out);
TD_API td_status td_enumerate(int n, td_graph_list** out);
TD_API size_t td_graph_list_size(const td_graph_list* list);
/* Borrowed graph owned by the list; valid until the list is freed. */
TD_API td_status td_graph_list_at(const td_graph_list* list, size_t index, const td_graph** out);
TD_API void td_graph_list_free(td_graph_list* list);

/* Certificate matrices */
TD_API td_status td_matrix_builtin(td_matrix** out);
/* JSON {"denominator": int, "numerators": 7x7 int}; integers may be strings. */
TD_API td_status td_matrix_load(const char* path, td_matrix** out);
TD_API td_status td_matrix_check(const td_matrix* m, int* psd, int* rank, int* kernel_ok);
TD_API void td_matrix_free(td_matrix* m);

/* Certificate verification. threshold is a rational "p/q" or NULL for 21;
 * jobs = 0 uses every core. */
TD_API td_status td_verify(const td_matrix* m, const char* threshold, unsigned jobs, td_report** out);
TD_API td_status td_report_verified(const td_report* r, int* out);
TD_API td_status td_report_write_jsonl(const td_report* r, const char* path);
TD_API td_status td_report_summary_json(const td_report* r, char** out);
TD_API void td_report_free(td_report* r);

/* Per-graph values and corollary records, each a single JSON object. */
TD_API td_status td_values_json(const td_graph* g, char** out);
TD_API td_status td_corollary_json(const td_graph* g, char** out);

/* Decomposition */
typedef enum td_method { TD_METHOD_AVERAGING = 0, TD_METHOD_GREEDY = 1 } td_method;

typedef struct td_decompose_options {
  td_method method;
  /* 0 selects exhaustive averaging; otherwise the number of random 7-subsets. */
  uint64_t sample_count;
  uint64_t seed;
  /* Largest C(n,7) accepted by exhaustive averaging. */
  uint64_t budget;
  unsigned jobs;
} td_decompose_options;

TD_API void td_decompose_options_init(td_decompose_options* options);
TD_API td_status td_decompose(const td_graph* g, const td_decompose_options* options,
                              td_decomposition** out);
TD_API td_status td_decomposition_json(const td_decomposition* d, char** out);
TD_API td_status td_decomposition_summary_json(const td_decomposition* d, char** out);
TD_API td_status td_decomposition_total_weight(const td_decomposition* d, char** out);
/* 1 when every edge is covered with weight exactly 1. */
TD_API td_status td_decomposition_is_exact(const td_decomposition* d, int* out);
TD_API void td_decomposition_free(td_decomposition* d);

#ifdef __cplusplus
}
#endif

#endif
