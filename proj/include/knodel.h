#ifndef KNODEL_H
#define KNODEL_H

/*
 * C interface to libknodel: Knödel graphs W(delta, n), dominating sets,
 * the closed-form domination number of W(4, n), an exact solver and
 * cyclic-sequence enumeration.
 *
 * Conventions:
 *  - Every fallible call returns knodel_status; KNODEL_OK is 0.
 *  - On failure, knodel_last_error() describes the error for the calling thread.
 *  - Handles are opaque; each *_create / producing call is paired with a *_destroy.
 *  - Array outputs take (buffer, capacity, &count). count always receives the
 *    required length; KNODEL_E_BUFFER_TOO_SMALL is returned if capacity < count.
 *    A NULL buffer with capacity 0 is a valid size query.
 *  - Vertex indices are 1-based: u_1..u_{n/2} and v_1..v_{n/2}.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(KNODEL_BUILDING_LIBRARY)
#    define KNODEL_API __declspec(dllexport)
#  else
#    define KNODEL_API __declspec(dllimport)
#  endif
#else
#  define KNODEL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum knodel_status {
  KNODEL_OK = 0,
  KNODEL_E_INVALID_ARGUMENT = 1,
  KNODEL_E_OUT_OF_RANGE = 2,
  KNODEL_E_CONSTRUCTION_FAILED = 3,
  KNODEL_E_UNSUPPORTED = 4,
  KNODEL_E_NULL_POINTER = 5,
  KNODEL_E_BUFFER_TOO_SMALL = 6,
  KNODEL_E_INTERNAL = 7
} knodel_status;

typedef enum knodel_side { KNODEL_SIDE_U = 0, KNODEL_SIDE_V = 1 } knodel_side;

typedef struct knodel_vertex {
  int32_t side; /* knodel_side */
  int32_t index;
} knodel_vertex;

typedef struct knodel_graph knodel_graph;
typedef struct knodel_set knodel_set;
typedef struct knodel_seq_list knodel_seq_list;

KNODEL_API const char* knodel_last_error(void);
KNODEL_API const char* knodel_status_string(knodel_status status);

/* ---- graphs ---------------------------------------------------------- */

KNODEL_API knodel_status knodel_graph_create(int delta, int n, knodel_graph** out);
KNODEL_API void knodel_graph_destroy(knodel_graph* g);
KNODEL_API int knodel_graph_delta(const knodel_graph* g);
KNODEL_API int knodel_graph_order(const knodel_graph* g);

KNODEL_API knodel_status knodel_graph_neighbors(const knodel_graph* g, knodel_vertex x, knodel_vertex* out,
                                                size_t capacity, size_t* count);
KNODEL_API knodel_status knodel_original_label(knodel_vertex x, int* part, int* j);
KNODEL_API knodel_status knodel_m_delta(int delta, int* out, size_t capacity, size_t* count);
KNODEL_API knodel_status knodel_index_distance(const knodel_graph* g, knodel_vertex a, knodel_vertex b, int* out);
KNODEL_API knodel_status knodel_common_neighbor_predicate(const knodel_graph* g, knodel_vertex a, knodel_vertex b,
                                                          int* out);
KNODEL_API knodel_status knodel_common_neighbors(const knodel_graph* g, knodel_vertex a, knodel_vertex b,
                                                 knodel_vertex* out, size_t capacity, size_t* count);
/* Gap sequence of a set of U-indices. */
KNODEL_API knodel_status knodel_cyclic_sequence(const knodel_graph* g, const int32_t* u_indices, size_t n_indices,
                                                int32_t* gaps, size_t capacity, size_t* count);

/* ---- vertex sets and domination -------------------------------------- */

KNODEL_API knodel_status knodel_set_create(const knodel_graph* g, knodel_set** out);
KNODEL_API void knodel_set_destroy(knodel_set* s);
/* Graph parameters the set is bound to. */
KNODEL_API knodel_status knodel_set_graph(const knodel_set* s, int* delta, int* n);
KNODEL_API knodel_status knodel_set_add(knodel_set* s, knodel_vertex x);
KNODEL_API knodel_status knodel_set_contains(const knodel_set* s, knodel_vertex x, int* out);
KNODEL_API size_t knodel_set_size(const knodel_set* s);
/* Members sorted: U by index, then V by index. */
KNODEL_API knodel_status knodel_set_members(const knodel_set* s, knodel_vertex* out, size_t capacity,
                                            size_t* count);

KNODEL_API knodel_status knodel_closed_neighborhood(const knodel_graph* g, const knodel_set* s, knodel_set** out);
KNODEL_API knodel_status knodel_is_dominating(const knodel_graph* g, const knodel_set* s, int* out);
KNODEL_API knodel_status knodel_undominated(const knodel_graph* g, const knodel_set* s, knodel_set** out);
KNODEL_API knodel_status knodel_gamma_bounds(const knodel_graph* g, int* lower, int* upper);
KNODEL_API knodel_status knodel_greedy_upper_bound(const knodel_graph* g, knodel_set** out);

/* ---- closed form for W(4, n) ----------------------------------------- */

typedef struct knodel_gamma_formula {
  int n;
  int t;
  int residue;
  int addend;
  int value;
  int exceptional;
} knodel_gamma_formula;

KNODEL_API knodel_status knodel_gamma_formula_eval(int n, knodel_gamma_formula* out);
/* On KNODEL_E_CONSTRUCTION_FAILED, *witnesses (if non-NULL) receives the undominated set. */
KNODEL_API knodel_status knodel_construct_dominating_set(int n, knodel_set** out, knodel_set** witnesses);

/* ---- exact solving --------------------------------------------------- */

typedef enum knodel_solve_status {
  KNODEL_SOLVE_OPTIMAL = 0,
  KNODEL_SOLVE_UNKNOWN = 1,
  KNODEL_SOLVE_NONE_WITHIN_LIMIT = 2
} knodel_solve_status;

typedef struct knodel_solve_options {
  double time_budget_seconds; /* negative: unlimited; 0: skip the search */
  int threads;                /* <= 1: single-threaded reference mode */
  int canonical;              /* nonzero: lexicographically smallest certificate */
} knodel_solve_options;

typedef struct knodel_solve_outcome {
  int32_t status; /* knodel_solve_status */
  int value;
  int lower_bound;
  int upper_bound;
  uint64_t nodes_explored;
  double elapsed_ms;
} knodel_solve_outcome;

KNODEL_API knodel_solve_options knodel_solve_options_default(void);
/* *certificate receives the best set found (may be NULL to skip). */
KNODEL_API knodel_status knodel_solve_exact(const knodel_graph* g, const knodel_solve_options* options,
                                            knodel_solve_outcome* outcome, knodel_set** certificate);
KNODEL_API knodel_status knodel_brute_force_min(const knodel_graph* g, int max_size, knodel_solve_outcome* outcome,
                                                knodel_set** certificate);

/* ---- cyclic sequences ------------------------------------------------ */

KNODEL_API knodel_status knodel_canonical_rotation(const int32_t* gaps, size_t k, int32_t* out);
/* U-indices 1, 1+g_1, ... ; the gaps must sum to n/2 of g. out has room for k entries. */
KNODEL_API knodel_status knodel_reconstruct_positions(const knodel_graph* g, const int32_t* gaps, size_t k,
                                                      int32_t* out);
KNODEL_API knodel_status knodel_colliding_pairs(const knodel_graph* g, const int32_t* u_indices, size_t n_indices,
                                                int* out);

typedef struct knodel_seq_info {
  size_t k;
  int half;
  int parts_in_m;
  int adjacent_sums_in_m;
  int colliding_pairs;
} knodel_seq_info;

KNODEL_API knodel_status knodel_enumerate_sequences(int delta, int k, int total, int parts_in_m_exact,
                                                    int adjacent_sums_in_m_max, knodel_seq_list** out);
KNODEL_API void knodel_seq_list_destroy(knodel_seq_list* list);
KNODEL_API size_t knodel_seq_list_size(const knodel_seq_list* list);
/* gaps has room for at least info->k entries; pass NULL gaps to query info only. */
KNODEL_API knodel_status knodel_seq_list_get(const knodel_seq_list* list, size_t i, knodel_seq_info* info,
                                             int32_t* gaps, size_t capacity);

#ifdef __cplusplus
}
#endif

#endif /* KNODEL_H */
