/*
 * fanq: signless Laplacian spectral radius, k-fan detection and exhaustive
 * extremal search for small graphs.
 *
 * Plain C interface over the C++ library. Graphs and certificates are opaque
 * handles owned by the caller and released with the matching *_free call.
 * Every fallible function returns a fanq_status; on failure the calling
 * thread's fanq_last_error() describes what went wrong. Strings returned
 * through char** are heap allocated and released with fanq_string_free().
 */
#ifndef FANQ_H
#define FANQ_H

#include <stddef.h>
#include <stdint.h>

#if defined(FANQ_BUILDING_LIBRARY)
#define FANQ_API __attribute__((visibility("default")))
#else
#define FANQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fanq_status {
  FANQ_OK = 0,
  FANQ_ERR_INVALID_ARGUMENT = 1,
  FANQ_ERR_PARSE = 2,
  FANQ_ERR_PRECONDITION = 3,
  FANQ_ERR_INTERNAL = 4,
  FANQ_ERR_IO = 5,
  FANQ_ERR_NULL_POINTER = 6
} fanq_status;

typedef enum fanq_named_kind {
  FANQ_COMPLETE = 0,           /* a = n */
  FANQ_SPLIT = 1,              /* a = n, b = k */
  FANQ_FAN = 2,                /* a = k */
  FANQ_COMPLETE_BIPARTITE = 3, /* a, b = part sizes */
  FANQ_CYCLE = 4,              /* a = n */
  FANQ_PATH = 5,               /* a = n */
  FANQ_EMPTY = 6               /* a = n */
} fanq_named_kind;

typedef enum fanq_regime { FANQ_REGIME_CLIQUE = 0, FANQ_REGIME_SPLIT = 1, FANQ_REGIME_BOUNDARY = 2 } fanq_regime;

typedef enum fanq_verdict {
  FANQ_VERDICT_CONFIRMED = 0,
  FANQ_VERDICT_COUNTEREXAMPLE = 1,
  FANQ_VERDICT_OUTSIDE_REGIME = 2
} fanq_verdict;

typedef enum fanq_pattern { FANQ_PATTERN_KK2 = 0, FANQ_PATTERN_FAN = 1 } fanq_pattern;

typedef struct fanq_graph fanq_graph;
typedef struct fanq_certificate fanq_certificate;

typedef struct fanq_tolerances {
  double eigen;     /* eigenvalue accuracy */
  double margin;    /* equality margin for ties between q1 values */
  double tie_exact; /* tightened re-verification of ties */
} fanq_tolerances;

typedef struct fanq_search_options {
  fanq_tolerances tolerances;
  int shards; /* enumeration shards, >= 1 */
  int jobs;   /* worker threads; 0 = one per processor */
} fanq_search_options;

/* Returns nonzero to stop the enumeration early. The graph is only valid
 * during the call. */
typedef int (*fanq_graph_callback)(const fanq_graph* graph, void* user);

FANQ_API const char* fanq_version(void);
FANQ_API const char* fanq_last_error(void);
FANQ_API const char* fanq_status_name(fanq_status status);
FANQ_API void fanq_string_free(char* s);

FANQ_API fanq_tolerances fanq_default_tolerances(void);
FANQ_API fanq_search_options fanq_default_search_options(void);

/* Graphs. Vertex cap is 64. */
FANQ_API fanq_status fanq_graph_new(int n, fanq_graph** out);
FANQ_API fanq_status fanq_graph_from_graph6(const char* text, fanq_graph** out);
FANQ_API fanq_status fanq_graph_make(fanq_named_kind kind, int a, int b, fanq_graph** out);
FANQ_API fanq_status fanq_graph_join(const fanq_graph* g, const fanq_graph* h, fanq_graph** out);
FANQ_API fanq_status fanq_graph_clone(const fanq_graph* g, fanq_graph** out);
FANQ_API void fanq_graph_free(fanq_graph* g);
FANQ_API fanq_status fanq_graph_add_edge(fanq_graph* g, int u, int v);
FANQ_API int fanq_graph_order(const fanq_graph* g);
FANQ_API int fanq_graph_size(const fanq_graph* g);
FANQ_API int fanq_graph_adjacent(const fanq_graph* g, int u, int v);
FANQ_API fanq_status fanq_graph_to_graph6(const fanq_graph* g, char** out);
FANQ_API fanq_status fanq_graph_canonical_form(const fanq_graph* g, char** out);
/* *k_out = k when g is isomorphic to S_{n,k}, otherwise 0. */
FANQ_API fanq_status fanq_graph_split_parameter(const fanq_graph* g, int* k_out);
/* Vertices at distance exactly 2 from v, as a bitmask. */
FANQ_API fanq_status fanq_graph_second_neighborhood(const fanq_graph* g, int v, uint64_t* out);
FANQ_API fanq_status fanq_graph_cut_edges(const fanq_graph* g, uint64_t s, uint64_t t, int* out);

/* Spectral. */
FANQ_API fanq_status fanq_q1(const fanq_graph* g, double* out);
/* Writes the order() eigenvalues of Q(G), non-increasing. */
FANQ_API fanq_status fanq_signless_spectrum(const fanq_graph* g, double* eigenvalues, size_t capacity);
FANQ_API fanq_status fanq_merris_bound(const fanq_graph* g, double* value, int* vertex);
FANQ_API fanq_status fanq_q1_split_closed_form(int n, int k, double* out);
FANQ_API fanq_status fanq_q1_split_lower_bound(int n, int k, double* out);
FANQ_API fanq_status fanq_degree_sum_identity(const fanq_graph* g, int v, int64_t* lhs, int64_t* rhs, int* equal);

/* Matchings. */
FANQ_API fanq_status fanq_matching_number(const fanq_graph* g, int* out);
FANQ_API fanq_status fanq_is_kk2_free(const fanq_graph* g, int k, int* out);
FANQ_API fanq_status fanq_max_edges_matching(int n, int alpha, int64_t* value, fanq_regime* regime);
FANQ_API fanq_status fanq_turan_kk2(int n, int k, int64_t* value, fanq_regime* regime);

/* Fans. pairs (optional) receives 2k vertex ids of the witness edges. */
FANQ_API fanq_status fanq_contains_fan(const fanq_graph* g, int k, int* contains, int* center, int* pairs);
FANQ_API fanq_status fanq_is_fan_saturated(const fanq_graph* g, int k, int* out);
FANQ_API fanq_status fanq_common_neighbor_check(const fanq_graph* g, int* out);

/* Enumeration: one canonical graph per isomorphism class of order n <= 11.
 * shard_count 0 means unsharded; callback may be NULL to only count. */
FANQ_API fanq_status fanq_enumerate(int n, int connected_only, int shard_index, int shard_count,
                                    fanq_graph_callback callback, void* user, uint64_t* count);

/* Exhaustive search. graph6_text NULL selects internal enumeration; otherwise
 * it holds one graph6 line per isomorphism class of order n. */
FANQ_API fanq_status fanq_certify(int n, int k, const fanq_search_options* options, const char* graph6_text,
                                  int fail_fast, fanq_certificate** out);
FANQ_API void fanq_certificate_free(fanq_certificate* cert);
FANQ_API fanq_verdict fanq_certificate_verdict(const fanq_certificate* cert);
FANQ_API double fanq_certificate_winner_q1(const fanq_certificate* cert);
FANQ_API int fanq_certificate_winner_is_split(const fanq_certificate* cert);
/* 0 confirmed or outside the regime, 2 counterexample. */
FANQ_API int fanq_certificate_exit_code(const fanq_certificate* cert);
FANQ_API fanq_status fanq_certificate_json(const fanq_certificate* cert, char** out);

FANQ_API fanq_status fanq_turan(int n, fanq_pattern pattern, int k, const char* graph6_text, int fail_fast,
                                char** json_out);
FANQ_API fanq_status fanq_efgg_value(int n, int k, int64_t* value, int* guaranteed);
/* spec_json (optional) receives the construction description as JSON. */
FANQ_API fanq_status fanq_efgg_construction(int n, int k, fanq_graph** out, char** spec_json);

#ifdef __cplusplus
}
#endif

#endif /* FANQ_H */
