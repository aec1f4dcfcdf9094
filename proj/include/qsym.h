/* C API for the qsym library: opaque handles, integer status codes, JSON
 * string payloads. Every output string is allocated by the library and must
 * be released with qsym_string_free; handles are released with their _free
 * function. On any failure the optional char** error output receives a
 * malloc'd message (also qsym_string_free'd by the caller). */

#ifndef QSYM_H
#define QSYM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qsym_graph qsym_graph;
typedef struct qsym_triple qsym_triple;

enum {
  QSYM_OK = 0,
  QSYM_NEGATIVE = 1,  /* operation ran, answer is "no" (e.g. not equivalent) */
  QSYM_ERR_INPUT = 2, /* parse error, schema violation, bad argument */
  QSYM_ERR_BUDGET = 3,
  QSYM_ERR_INTERNAL = 4
};

void qsym_string_free(char* s);

/* ---- graphs ---- */
int qsym_graph_parse(const char* json_text, qsym_graph** out, char** error);
void qsym_graph_free(qsym_graph* g);
int qsym_graph_to_json(const qsym_graph* g, char** out, char** error);
/* Validation report as JSON ({"ok":..,"violations":[..],"notes":[..]});
 * returns QSYM_NEGATIVE when violations exist. */
int qsym_graph_validate(const qsym_graph* g, char** report, char** error);

/* ---- triples ---- */
int qsym_triple_parse(const char* json_text, qsym_triple** out, char** error);
void qsym_triple_free(qsym_triple* t);
int qsym_triple_to_json(const qsym_triple* t, char** out, char** error);
int qsym_triple_validate(const qsym_triple* t, char** report, char** error);
int qsym_pullback(const qsym_graph* g, qsym_triple** out, char** error);

/* Composable pairs of (graph1, graph2) as JSON. */
int qsym_composable_pairs(const qsym_triple* t, char** out, char** error);

/* Boundary-preserving bijection count (decimal string; exact). Pass two
 * graphs; for a triple's graphs use qsym_triple_* accessors below. */
int qsym_theta_count(const qsym_graph* x, const qsym_graph* y, char** count,
                     char** error);
/* JSON array of bijections (each in triple-theta format); at most `limit`
 * when limit > 0. */
int qsym_theta_enumerate(const qsym_graph* x, const qsym_graph* y, uint64_t limit,
                         char** out, char** error);

int qsym_triple_graph1(const qsym_triple* t, qsym_graph** out, char** error);
int qsym_triple_graph2(const qsym_triple* t, qsym_graph** out, char** error);

/* JSON matrix of degree-(m,n) morphism counts. */
int qsym_skeleton_count(const qsym_triple* t, int m, int n, char** out, char** error);

/* Witness list as JSON; QSYM_NEGATIVE when not equivalent. `all` = 0 stops
 * at the first witness. */
int qsym_equivalences(const qsym_triple* a, const qsym_triple* b, int all, char** out,
                      char** error);
/* Classical automorphism group report as JSON. */
int qsym_automorphisms(const qsym_triple* t, char** out, char** error);

/* Canonical defining presentation as JSON. */
int qsym_presentation(const qsym_triple* t, char** out, char** error);

/* Full analysis report as JSON. degree_bound <= 0 picks the default (4);
 * budget 0 picks the default; jobs <= 0 picks 1; dump_ideal != 0 embeds the
 * saturation dump in the report. */
int qsym_analyze(const qsym_triple* t, int degree_bound, size_t budget, int jobs,
                 int dump_ideal, char** out, char** error);

/* Redundancy of each theta relation (JSON array of booleans). */
int qsym_theta_redundancy(const qsym_triple* t, int degree_bound, size_t budget,
                          int jobs, char** out, char** error);

/* Built-in fixtures. */
int qsym_fixture_names(char** out, char** error); /* JSON array of names */
int qsym_fixture_json(const char* name, char** out, char** error);

#ifdef __cplusplus
}
#endif

#endif /* QSYM_H */
