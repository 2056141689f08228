#ifndef HOPNAV_H
#define HOPNAV_H

/* C interface to the hop-spanner library. Handles are opaque; every call
 * returns a status aligned with the CLI exit codes, and the per-thread
 * hn_last_error() holds the message of the most recent failure.
 *
 * Output buffers follow a size-query convention: pass a null buffer to
 * receive the required capacity in *need (element count for arrays, bytes
 * including the terminator for text), then call again with storage of at
 * least that size. A non-null buffer that is too small is an input error.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  HN_OK = 0,
  HN_INPUT_ERROR = 2,
  HN_PROPERTY_VIOLATION = 3,
  HN_INTERNAL_ERROR = 4
} hn_status;

typedef struct hn_tree hn_tree;
typedef struct hn_metric hn_metric;
typedef struct hn_cover hn_cover;
typedef struct hn_spanner hn_spanner;
typedef struct hn_annotation hn_annotation;
typedef struct hn_navigator hn_navigator;
typedef struct hn_routing hn_routing;
typedef struct hn_cover_routing hn_cover_routing;
typedef struct hn_verifier hn_verifier;

const char* hn_last_error(void);

/* -------- inverse-Ackermann hierarchy -------- */

hn_status hn_alpha(int k, uint64_t n, uint64_t* out);
hn_status hn_alpha_prime(int k, uint64_t n, uint64_t* out);
hn_status hn_eval_lower_bound(int64_t n, int k, double* out);

/* -------- instance generation -------- */

hn_status hn_gen_instance(const char* kind, int64_t n, uint64_t seed, int64_t max_w, int dim,
                          int float_weights, char* buf, size_t cap, size_t* need);

/* -------- weighted trees -------- */

hn_status hn_tree_parse(const char* text, hn_tree** out);
hn_status hn_tree_format(const hn_tree* t, char* buf, size_t cap, size_t* need);
hn_status hn_tree_size(const hn_tree* t, int64_t* n);
hn_status hn_tree_distance(const hn_tree* t, int64_t u, int64_t v, double* out);
void hn_tree_free(hn_tree* t);

/* -------- hop spanners and path queries -------- */

hn_status hn_spanner_build(const hn_tree* t, int k, hn_spanner** out);
hn_status hn_spanner_edge_count(const hn_spanner* s, int64_t* out);
hn_status hn_spanner_format(const hn_spanner* s, char* buf, size_t cap, size_t* need);
hn_status hn_spanner_path(const hn_spanner* s, int64_t u, int64_t v, int64_t* verts, size_t cap,
                          size_t* need, double* weight, int* hops, int* nav_depth);
void hn_spanner_free(hn_spanner* s);

/* Semigroup annotations over caller-defined values: each tree edge carries
 * one value per direction, stored as val_size bytes; op combines "a then b"
 * into out and must be associative. The spanner must outlive the handle. */
typedef void (*hn_semigroup_op)(void* ctx, const void* a, const void* b, void* out);

hn_status hn_annotation_build(const hn_spanner* s, const void* fwd_vals, const void* bwd_vals,
                              size_t val_size, hn_semigroup_op op, void* ctx,
                              hn_annotation** out);
hn_status hn_annotation_query(const hn_annotation* a, int64_t u, int64_t v, void* out,
                              int* has_value, int64_t* ops);
void hn_annotation_free(hn_annotation* a);

/* -------- finite metrics -------- */

hn_status hn_metric_parse(const char* text, hn_metric** out);
hn_status hn_metric_from_tree(const hn_tree* t, hn_metric** out);
hn_status hn_metric_format(const hn_metric* m, char* buf, size_t cap, size_t* need);
hn_status hn_metric_size(const hn_metric* m, int64_t* n);
hn_status hn_metric_point(const hn_metric* m, int64_t index, int64_t* id);
hn_status hn_metric_distance(const hn_metric* m, int64_t a, int64_t b, double* out);
void hn_metric_free(hn_metric* m);

/* -------- tree covers -------- */

hn_status hn_cover_star(const hn_metric* m, hn_cover** out);
hn_status hn_cover_single_tree(const hn_tree* t, hn_cover** out);
/* Parses and validates against the metric; a cover that fails domination,
 * coverage, or its per-point promise is a property violation with a witness
 * pair in hn_last_error(). */
hn_status hn_cover_load(const char* text, const hn_metric* m, hn_cover** out);
hn_status hn_cover_format(const hn_cover* c, char* buf, size_t cap, size_t* need);
hn_status hn_cover_shape(const hn_cover* c, double* gamma, int* zeta);
void hn_cover_free(hn_cover* c);

/* -------- metric navigation -------- */

hn_status hn_navigator_build(const hn_metric* m, const hn_cover* c, int k, hn_navigator** out);
hn_status hn_navigator_edge_count(const hn_navigator* nav, int64_t* out);
hn_status hn_navigator_path(const hn_navigator* nav, int64_t u, int64_t v, int include_steiner,
                            int64_t* verts, size_t cap, size_t* need, double* weight, int* hops,
                            int* tree);
void hn_navigator_free(hn_navigator* nav);

/* -------- applications -------- */

/* Parallel arrays over the reached union vertices in reach order; the root
 * lists itself as parent with distance 0. */
hn_status hn_spt(const hn_navigator* nav, int64_t root, int64_t* ids, int64_t* parents,
                 double* dists, size_t cap, size_t* need);

hn_status hn_mst(const hn_navigator* nav, int64_t* ea, int64_t* eb, double* ew, size_t cap,
                 size_t* need, double* weight, double* base_weight, int64_t* union_edges);

hn_status hn_sparsify(const hn_navigator* nav, const int64_t* ga, const int64_t* gb, size_t glen,
                      int64_t* ea, int64_t* eb, double* ew, size_t cap, size_t* need,
                      double* weight, double* input_weight);

hn_status hn_greedy_spanner(const hn_metric* m, double beta, int64_t* ea, int64_t* eb, size_t cap,
                            size_t* need);

hn_status hn_verifier_build(const hn_tree* t, int k, hn_verifier** out);
hn_status hn_verify_edge(const hn_verifier* v, int64_t u, int64_t v2, double w, int optimized,
                         int* heavier, int64_t* comparisons);
void hn_verifier_free(hn_verifier* v);

/* -------- two-hop routing -------- */

typedef struct {
  int delivered;
  int hops;
  double weight;
  int tree;                 /* cover routing: tree index used, else -1 */
  int64_t max_comparisons;  /* worst single forwarding decision */
} hn_route_info;

hn_status hn_routing_build(const hn_tree* t, uint64_t seed, hn_routing** out);
hn_status hn_route(const hn_routing* r, int64_t from, int64_t to, hn_route_info* info,
                   int64_t* trace, size_t trace_cap, size_t* trace_need, char* reason,
                   size_t reason_cap);
/* Worst per-vertex entry count and information-theoretic table size. */
hn_status hn_routing_audit(const hn_routing* r, int64_t* max_entries, int64_t* max_bits);
void hn_routing_free(hn_routing* r);

hn_status hn_cover_routing_build(const hn_metric* m, const hn_cover* c, uint64_t seed,
                                 hn_cover_routing** out);
hn_status hn_cover_route(const hn_cover_routing* cr, int64_t from, int64_t to,
                         hn_route_info* info, int64_t* trace, size_t trace_cap,
                         size_t* trace_need, char* reason, size_t reason_cap);
void hn_cover_routing_free(hn_cover_routing* cr);

#ifdef __cplusplus
}
#endif

#endif /* HOPNAV_H */
