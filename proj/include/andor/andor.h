/* C interface to the AND/OR search library. Every object is an opaque handle
 * owned by the caller and released with its matching *_free function. Calls
 * that can fail return an andor_status; the message for the last failure on
 * the calling thread is available from andor_last_error(). */
#ifndef ANDOR_H
#define ANDOR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ANDOR_BUILDING)
#    define ANDOR_API __declspec(dllexport)
#  else
#    define ANDOR_API __declspec(dllimport)
#  endif
#else
#  define ANDOR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum andor_status {
    ANDOR_OK = 0,
    ANDOR_E_DUPLICATE_ID,
    ANDOR_E_SPARSE_IDS,
    ANDOR_E_DANGLING_EDGE,
    ANDOR_E_NEGATIVE_COST,
    ANDOR_E_TERMINAL_WITH_CHILDREN,
    ANDOR_E_UNKNOWN_NODE,
    ANDOR_E_CYCLIC_GRAPH,
    ANDOR_E_INVALID_SOLUTION_GRAPH,
    ANDOR_E_INCONSISTENT_TABLE,
    ANDOR_E_NONTERMINAL_LEAF,
    ANDOR_E_TOO_MANY_LEAVES,
    ANDOR_E_NOT_ALTERNATING,
    ANDOR_E_INVALID_PARAMS,
    ANDOR_E_UNKNOWN_FIXTURE,
    ANDOR_E_DEAD_END,
    ANDOR_E_PARSE,
    ANDOR_E_VALIDATION,
    ANDOR_E_IO,
    ANDOR_E_INVALID_ARGUMENT,
    ANDOR_E_NULL_ARGUMENT,
    ANDOR_E_NO_SOLUTION,
    ANDOR_E_INTERNAL
} andor_status;

typedef struct andor_graph andor_graph;
typedef struct andor_outcome andor_outcome;
typedef struct andor_compare_result andor_compare_result;

ANDOR_API const char* andor_last_error(void);
ANDOR_API const char* andor_status_name(andor_status status);
/* Releases strings returned through char** out-parameters. */
ANDOR_API void andor_string_free(char* s);

/* ---- graphs ---- */

ANDOR_API andor_status andor_graph_load(const char* path, andor_graph** out);
ANDOR_API andor_status andor_graph_parse(const char* json, andor_graph** out);
/* fig1, fig1_terminalized, fig3, fig4, fig6 */
ANDOR_API andor_status andor_graph_fixture(const char* name, andor_graph** out);

typedef enum andor_heuristic_mode {
    ANDOR_HEURISTIC_UNIT,
    ANDOR_HEURISTIC_ORACLE_ADMISSIBLE,
    ANDOR_HEURISTIC_EXACT
} andor_heuristic_mode;

typedef struct andor_dag_params {
    size_t n_nodes;
    size_t layers;
    double or_fraction;
    size_t max_children;
    double cost_lo;
    double cost_hi;
    double terminal_fraction;
    double solvable_fraction;
    andor_heuristic_mode heuristic_mode;
    double noise;
    uint64_t seed;
} andor_dag_params;

typedef struct andor_tree_params {
    size_t depth;
    size_t branching;
    double terminal_prob;
    double win_prob;
    uint32_t leaf_value_max;
    uint64_t seed;
} andor_tree_params;

ANDOR_API void andor_dag_params_init(andor_dag_params* p);
ANDOR_API void andor_tree_params_init(andor_tree_params* p);
ANDOR_API andor_status andor_graph_gen_dag(const andor_dag_params* p, andor_graph** out);
ANDOR_API andor_status andor_graph_gen_tree(const andor_tree_params* p, andor_graph** out);

ANDOR_API andor_status andor_graph_to_json(const andor_graph* g, char** out);
ANDOR_API andor_status andor_graph_save(const andor_graph* g, const char* path);
/* 1 when both graphs have identical nodes, edges and root. */
ANDOR_API int andor_graph_equal(const andor_graph* a, const andor_graph* b);
ANDOR_API size_t andor_graph_node_count(const andor_graph* g);
ANDOR_API size_t andor_graph_edge_count(const andor_graph* g);
ANDOR_API void andor_graph_free(andor_graph* g);

/* ---- search ---- */

typedef enum andor_algorithm {
    ANDOR_ALG_AO_STAR,
    ANDOR_ALG_PNS,
    ANDOR_ALG_PNS_STAR,
    ANDOR_ALG_BFMM
} andor_algorithm;

typedef enum andor_psi { ANDOR_PSI_SUM, ANDOR_PSI_MAX } andor_psi;

typedef enum andor_tie {
    ANDOR_TIE_FIRST_CHILD,
    ANDOR_TIE_LAST_CHILD,
    ANDOR_TIE_RANDOM
} andor_tie;

typedef enum andor_pick {
    ANDOR_PICK_ANY_FIRST,
    ANDOR_PICK_ANY_RANDOM,
    ANDOR_PICK_DEEPEST,
    ANDOR_PICK_HIGHEST_H
} andor_pick;

typedef struct andor_run_config {
    andor_algorithm algorithm;
    andor_psi psi;
    andor_tie tie;
    uint64_t tie_seed;
    andor_pick pick;
    uint64_t pick_seed;
    int64_t max_expansions; /* negative: unlimited */
    int64_t max_nodes;      /* negative: unlimited */
    double value_scale;     /* bfmm only */
    int trace;
    int audit;
    int strict_marking;
} andor_run_config;

/* pns-star, sum, first-child ties, any-first pick, 10^6 expansions, trace on. */
ANDOR_API void andor_run_config_init(andor_run_config* c);
/* Accepts ao-star, pns, pns-star, bfmm. */
ANDOR_API andor_status andor_parse_algorithm(const char* name, andor_algorithm* out);

ANDOR_API andor_status andor_solve(const andor_graph* g, const andor_run_config* c, andor_outcome** out);
/* Built-in implicit games: "tictactoe". */
ANDOR_API andor_status andor_solve_game(const char* game, const andor_run_config* c, andor_outcome** out);

typedef enum andor_search_status {
    ANDOR_PROVED_SOLVABLE,
    ANDOR_PROVED_UNSOLVABLE,
    ANDOR_RESOURCE_EXHAUSTED
} andor_search_status;

typedef struct andor_stats {
    uint64_t expansions;
    uint64_t nodes_generated;
    uint64_t iterations;
    uint64_t ancestor_updates;
    uint64_t audit_mismatches;
    uint64_t audited_steps;
} andor_stats;

typedef struct andor_trace_entry {
    uint64_t iteration;
    uint64_t leaf; /* world key of the expanded leaf */
    double root_p;
    double root_d;
    int has_d;
} andor_trace_entry;

ANDOR_API andor_search_status andor_outcome_status(const andor_outcome* o);
ANDOR_API const char* andor_search_status_name(andor_search_status s);
ANDOR_API double andor_outcome_root_p(const andor_outcome* o);
/* Returns 1 and stores d when the engine keeps a disproof estimate. */
ANDOR_API int andor_outcome_root_d(const andor_outcome* o, double* d);
ANDOR_API void andor_outcome_stats(const andor_outcome* o, andor_stats* out);
ANDOR_API size_t andor_outcome_trace_length(const andor_outcome* o);
ANDOR_API andor_status andor_outcome_trace_entry(const andor_outcome* o, size_t i, andor_trace_entry* out);
/* ANDOR_E_NO_SOLUTION when the search ran out of budget. */
ANDOR_API andor_status andor_outcome_solution_json(const andor_outcome* o, char** out);
ANDOR_API andor_status andor_outcome_final_graph(const andor_outcome* o, andor_graph** out);
ANDOR_API void andor_outcome_free(andor_outcome* o);

/* ---- comparison harness ---- */

typedef struct andor_algorithm_spec {
    const char* label;
    andor_run_config config;
} andor_algorithm_spec;

/* Runs every spec on every graph; rows are ordered (graph, spec) regardless
 * of the thread count. */
ANDOR_API andor_status andor_compare(const andor_graph* const* graphs, const char* const* names, size_t n_graphs,
                                     const andor_algorithm_spec* specs, size_t n_specs, unsigned threads,
                                     andor_compare_result** out);
ANDOR_API size_t andor_compare_row_count(const andor_compare_result* r);
/* On failure the partially written file is removed. */
ANDOR_API andor_status andor_compare_write_csv(const andor_compare_result* r, const char* path);
ANDOR_API andor_status andor_compare_summary(const andor_compare_result* r, char** out);
ANDOR_API void andor_compare_free(andor_compare_result* r);

#ifdef __cplusplus
}
#endif

#endif /* ANDOR_H */
