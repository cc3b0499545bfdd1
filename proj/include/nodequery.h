/* C interface to the node-query library.
 *
 * Every function that can fail returns an nq_status; on failure the
 * thread-local message behind nq_last_error() describes what went wrong.
 * Strings handed out through char** are heap copies; release them with
 * nq_string_free. Handles are opaque; release with the matching _free.
 *
 * Vertex subsets travel as uint64_t bitmasks over labels 0..n-1.
 */
#ifndef NODEQUERY_H
#define NODEQUERY_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nq_status {
  NQ_OK = 0,
  NQ_ERR_ARGUMENT = 1, /* bad value for an otherwise well-formed input */
  NQ_ERR_CAP = 2,      /* instance exceeds a documented size cap */
  NQ_ERR_PARSE = 3,    /* malformed graph6 / property text */
  NQ_ERR_DOMAIN = 4,   /* operation undefined for this input */
  NQ_ERR_NOMEM = 5,
  NQ_ERR_INTERNAL = 6
} nq_status;

typedef struct nq_graph nq_graph;
typedef struct nq_property nq_property;

const char* nq_version(void);
/* Message from the last failing call on this thread; "" if none. */
const char* nq_last_error(void);
void nq_string_free(char* s);

/* ---- graphs ---- */
nq_status nq_graph_parse_g6(const char* text, nq_graph** out);
/* "name" or "name:a" or "name:a,b", e.g. "cycle:5", "petersen". */
nq_status nq_graph_from_generator(const char* spec, nq_graph** out);
int nq_graph_n(const nq_graph* g);
int nq_graph_m(const nq_graph* g);
nq_status nq_graph_write_g6(const nq_graph* g, char** out);
nq_status nq_graph_canonical_g6(const nq_graph* g, char** out); /* n <= 9 */
nq_status nq_graph_is_vertex_transitive(const nq_graph* g, int* out);
void nq_graph_free(nq_graph* g);

/* ---- properties ---- */
nq_status nq_property_parse(const char* name, nq_property** out);
nq_status nq_property_from_json(const char* json, nq_property** out);
nq_status nq_property_name(const nq_property* p, char** out);
nq_status nq_property_is_hereditary(const nq_property* p, int* out);
/* Minimum degree over minimal forbidden subgraphs (d_P). */
nq_status nq_property_min_degree(const nq_property* p, int* out);
/* Smallest t such that the complete graph K_t fails the property (c_P). */
nq_status nq_property_clique_threshold(const nq_property* p, int* out);
void nq_property_free(nq_property* p);

/* ---- evaluation and exact solving ---- */
nq_status nq_eval(const nq_graph* g, const nq_property* p, uint64_t subset,
                  int* out);
nq_status nq_relevant_vertices(const nq_graph* g, const nq_property* p,
                               uint64_t* out);
/* Exact decision-tree depth (n <= 13). strategy_json may be NULL; when
 * non-NULL it receives an optimal strategy serialized as JSON. */
nq_status nq_exact_cost(const nq_graph* g, const nq_property* p, int* out_cost,
                        char** strategy_json);

/* ---- lower-bound certifiers ---- */
/* certifier: a certifier name, or "all" for every applicable one. verify
 * nonzero additionally checks each bound against the exact solver and
 * replays its adversary rule. out receives a JSON array of bound records. */
nq_status nq_bounds(const nq_graph* g, const nq_property* p,
                    const char* certifier, int verify, char** out);
/* Largest sunflower found among minimal witness families, per witness
 * size, as a JSON record. Hereditary properties only. */
nq_status nq_sunflower(const nq_graph* g, const nq_property* p, char** out);

/* ---- constructions ---- */
/* Clique-with-petals instance on exactly n vertices for a hereditary
 * property, validated (correctness of the query algorithm on all or
 * sampled truths, budget, relevance; exact cost where the solver cap
 * admits). out receives the instance manifest plus validation as JSON. */
nq_status nq_construct(const nq_property* p, int n, char** out);

/* ---- sweeps ---- */
/* Minimum exact cost over isomorphism classes at size n where every
 * vertex is relevant. corpus_path NULL or "" generates all classes
 * (n <= 7). Deterministic for fixed inputs regardless of jobs. */
nq_status nq_mincost(const nq_property* p, int n, const char* corpus_path,
                     int transitive_only, int jobs, char** out);
/* Table over properties x n in 3..n_max, transitive and unrestricted
 * columns. out_text: aligned table; out_json: structured rows. Either
 * output pointer may be NULL to skip it. */
nq_status nq_report(const char* const* properties, int nproperties, int n_max,
                    int jobs, char** out_text, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* NODEQUERY_H */
