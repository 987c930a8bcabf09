/* qlap - Laplacian / signless Laplacian spectral bound toolkit.
 *
 * C API over the C++ core: opaque handles, integer status codes, and
 * malloc'd strings released through qlap_string_free. All functions are
 * thread-safe; the error detail string is thread-local.
 */
#ifndef QLAP_H
#define QLAP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qlap_graph qlap_graph;

typedef enum {
  QLAP_OK = 0,
  QLAP_ERR_PARSE = 1,       /* malformed graph6 or family spec */
  QLAP_ERR_INVALID_ARG = 2, /* parameter outside its documented range */
  QLAP_ERR_NUMERIC = 3,     /* solver failure */
  QLAP_ERR_IO = 4,          /* file errors */
  QLAP_ERR_INTERNAL = 5
} qlap_status;

const char* qlap_version(void);
const char* qlap_status_name(qlap_status status);
/* Detail for the most recent failure on this thread; empty string if none. */
const char* qlap_last_error(void);

void qlap_string_free(char* s);

/* ---- graphs ---------------------------------------------------------- */

qlap_status qlap_graph_from_graph6(const char* line, qlap_graph** out);
/* Family specs: "complete:N", "empty:N", "star:N", "bipartite:R,S",
 * "hn:N", "thmbiph:N,K,T,L", "join(a,b)", "union(a,b)". */
qlap_status qlap_graph_from_family(const char* spec, qlap_graph** out);
void qlap_graph_free(qlap_graph* g);

int qlap_graph_order(const qlap_graph* g);
long long qlap_graph_edges(const qlap_graph* g);
qlap_status qlap_graph_complement(const qlap_graph* g, qlap_graph** out);
qlap_status qlap_graph_to_graph6(const qlap_graph* g, char** out);

/* ---- spectra ---------------------------------------------------------- */

typedef enum {
  QLAP_MATRIX_ADJACENCY = 0,
  QLAP_MATRIX_LAPLACIAN = 1,
  QLAP_MATRIX_SIGNLESS_LAPLACIAN = 2
} qlap_matrix_kind;

/* values must hold order(g) doubles; written in non-increasing order. */
qlap_status qlap_spectrum(const qlap_graph* g, qlap_matrix_kind kind, double* values);
/* out[0..3] = mu1, mu_{n-1}, q1, spread. Needs order >= 2. */
qlap_status qlap_key_values(const qlap_graph* g, double out[4]);

/* ---- bounds ----------------------------------------------------------- */

/* Comma-separated op names accepted by qlap_bound_json and scans. */
const char* qlap_bound_ops(void);
/* One JSON object per emitted record (ops may emit two chained records),
 * joined by newlines. epsilon <= 0 selects the default 1e-7. */
qlap_status qlap_bound_json(const qlap_graph* g, const char* bound_op, double epsilon,
                            char** json_out);

/* ---- scans ------------------------------------------------------------ */

/* config_json fields:
 *   source: {"kind":"exhaustive","n":5} | {"kind":"file","path":"..."}
 *           | {"kind":"family","spec":"hn:6..30"}
 *   bounds: ["all"] or op names
 *   emit:   "violations" | "equalities" | "all"     (default "violations")
 *   emit_bounds: optional record-id filter
 *   jobs:   worker count (default 1)
 *   epsilon: tolerance (default 1e-7)
 * Each emitted record is passed to sink (one JSON line, no newline).
 * summary_json_out receives counts per bound and the violation totals. */
typedef void (*qlap_scan_sink)(const char* line, void* user);
qlap_status qlap_scan(const char* config_json, qlap_scan_sink sink, void* user,
                      char** summary_json_out);

/* ---- family study and search ------------------------------------------ */

/* Maximizes the closed-form product q1*q1bar of the clique-join family over
 * the clique size k. Needs n >= 6. */
qlap_status qlap_ratio_point(int n, int* best_k, double* product, double* ratio);
/* The family member at the canonical clique size k (n = 6k+s, -3 <= s <= 2). */
qlap_status qlap_hn_point(int n, int* k, double* q1, double* q1_bar, double* product);
double qlap_ratio_limit_constant(void);

/* Randomized edge-flip hill climbing maximizing q1(G)*q1(complement);
 * deterministic for a fixed seed. Needs n >= 4. */
qlap_status qlap_search(int n, long long iterations, unsigned long long seed,
                        char** best_graph6, double* product);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QLAP_H */
