/* C interface to the fiber analyzer. All functions are thread-compatible:
 * distinct result handles may be used from distinct threads. */

#ifndef POLYFIB_H
#define POLYFIB_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. */
#define PF_OK 0
#define PF_ERR_INPUT 1    /* bad expression, bad flags, unsupported input */
#define PF_ERR_INTERNAL 2 /* internal consistency failure */

typedef struct pf_result pf_result;

/* Analyze the polynomial written in the variables varx, vary (pass NULL for
 * the defaults "x", "y"). value: NULL to report every bifurcation value, or
 * a rational "p/q" to report that single value. json_indent: negative for
 * compact output. *out always receives a handle (free with pf_free); the
 * return value is a status code. */
int pf_analyze(const char* expr, const char* varx, const char* vary,
               const char* value, int json_indent, pf_result** out);

/* JSON report; NULL when the run failed. Owned by the handle. */
const char* pf_json(const pf_result* r);

/* Error message; NULL when the run succeeded. Owned by the handle. */
const char* pf_error(const pf_result* r);

/* DOT exports of every graph referenced by the JSON report. */
int pf_graph_count(const pf_result* r);
const char* pf_graph_name(const pf_result* r, int i);
const char* pf_graph_dot(const pf_result* r, int i);

void pf_free(pf_result* r);

#ifdef __cplusplus
}
#endif

#endif /* POLYFIB_H */
