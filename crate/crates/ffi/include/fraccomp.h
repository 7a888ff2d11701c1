#ifndef FRACCOMP_H
#define FRACCOMP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define FC_OK 0

#define FC_ERR_NULL -1

#define FC_ERR_UTF8 -2

#define FC_ERR_PARSE -3

#define FC_ERR_BUDGET -4

#define FC_ERR_DOMAIN -5

#define FC_ERR_PANIC -6

#define FC_ERR_INVALID -7

#define FC_LP_OPTIMAL 0

#define FC_LP_INFEASIBLE 1

#define FC_LP_UNBOUNDED 2

#define FC_PARAM_COVERING 0

#define FC_PARAM_PACKING 1

#define FC_PARAM_MATCHING 2

#define FC_PARAM_TRANSVERSAL 3

/**
 * A parsed simple graph.
 */
typedef struct FcGraph FcGraph;

/**
 * A parsed hypergraph.
 */
typedef struct FcHypergraph FcHypergraph;

/**
 * A parsed linear program.
 */
typedef struct FcLp FcLp;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread, or an empty string.
 * The pointer stays valid until the next `fc_*` call on the same thread.
 */
const char *fc_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void fc_string_free(char *s);

/**
 * Runs the command line with `argv` (without the program name) and returns
 * its stdout in `out_json` and its exit code in `out_exit`.
 *
 * # Safety
 * `argv` must point to `argc` valid C strings.
 */
int32_t fc_run_json(size_t argc, const char *const *argv, char **out_json, int32_t *out_exit);

/**
 * # Safety
 * `text` must be a valid C string; `out` must be writable.
 */
int32_t fc_lp_parse(const char *text, struct FcLp **out);

/**
 * # Safety
 * `lp` must come from this library and not have been freed already.
 */
void fc_lp_free(struct FcLp *lp);

/**
 * # Safety
 * `lp` must be a live handle; `out` must be writable.
 */
int32_t fc_lp_format(const struct FcLp *lp, char **out);

/**
 * Writes the complementary program as a new handle.
 *
 * # Safety
 * `lp` must be a live handle; `out` must be writable.
 */
int32_t fc_lp_complement(const struct FcLp *lp, struct FcLp **out);

/**
 * Solves exactly. `out_outcome` receives an `FC_LP_*` code; on optimality
 * `out_value` receives `"num/den"`, otherwise it is set to null.
 *
 * # Safety
 * `lp` must be a live handle; both out-pointers must be writable.
 */
int32_t fc_lp_solve(const struct FcLp *lp, int32_t *out_outcome, char **out_value);

/**
 * Checks the complementation statements for `lp`. `out_holds` is 1 when
 * every applicable check passes and 0 otherwise.
 *
 * # Safety
 * `lp` must be a live handle; `out_holds` must be writable.
 */
int32_t fc_lp_verify_complementation(const struct FcLp *lp, int32_t *out_holds);

/**
 * # Safety
 * `text` must be a valid C string; `out` must be writable.
 */
int32_t fc_hypergraph_parse(const char *text, struct FcHypergraph **out);

/**
 * # Safety
 * `h` must come from this library and not have been freed already.
 */
void fc_hypergraph_free(struct FcHypergraph *h);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
int32_t fc_hypergraph_format(const struct FcHypergraph *h, char **out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
int32_t fc_hypergraph_dual(const struct FcHypergraph *h, struct FcHypergraph **out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
int32_t fc_hypergraph_complement(const struct FcHypergraph *h, struct FcHypergraph **out);

/**
 * Fractional parameter `kind` (an `FC_PARAM_*` value) as `"num/den"`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
int32_t fc_hypergraph_fractional(const struct FcHypergraph *h, uint32_t kind, char **out);

/**
 * Checks the dual/complement parameter identities. `out_holds` is 1 when
 * every defined identity holds.
 *
 * # Safety
 * `h` must be a live handle; `out_holds` must be writable.
 */
int32_t fc_hypergraph_verify(const struct FcHypergraph *h, int32_t *out_holds);

/**
 * # Safety
 * `text` must be a valid C string; `out` must be writable.
 */
int32_t fc_graph_parse(const char *text, struct FcGraph **out);

/**
 * # Safety
 * `g` must come from this library and not have been freed already.
 */
void fc_graph_free(struct FcGraph *g);

/**
 * Fractional chromatic number as `"num/den"`. `max_enum` of 0 selects the
 * default enumeration budget.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
int32_t fc_graph_fractional_chromatic(const struct FcGraph *g, uint64_t max_enum, char **out);

/**
 * `κ_f` of the vertex cover hypergraph as `"num/den"`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
int32_t fc_graph_kappa(const struct FcGraph *g, uint64_t max_enum, char **out);

/**
 * Length of the longest family of vertex covers with budget `b`.
 *
 * # Safety
 * `g` must be a live handle; `out_t` must be writable.
 */
int32_t fc_graph_budget(const struct FcGraph *g, size_t b, uint64_t max_enum, size_t *out_t);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FRACCOMP_H */
