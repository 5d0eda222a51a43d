/* qnewton: exact q-Ehrhart polynomials of order polytopes, their Newton
 * polygons, and machine verification of the staircase polygon laws.
 *
 * Conventions:
 *   - Every function that can fail returns qn_status; QN_OK is 0. On any
 *     other status the thread-local message from qn_last_error() describes
 *     the failure, and output parameters are left untouched.
 *   - Strings returned through char** are heap-allocated, NUL-terminated,
 *     and must be released with qn_string_free().
 *   - Objects returned through **out parameters are owned by the caller and
 *     released with the matching *_free(). Pointers returned by *_get()
 *     accessors are borrowed views into their container.
 *   - All functions are re-entrant; distinct objects may be used from
 *     distinct threads concurrently.
 */
#ifndef QNEWTON_H
#define QNEWTON_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qn_status {
  QN_OK = 0,
  QN_ERR_CYCLE = 1,            /* relation closure hit a cycle */
  QN_ERR_RANGE = 2,            /* index or numeric argument out of range */
  QN_ERR_SIZE = 3,             /* guarded size limit exceeded */
  QN_ERR_BUDGET = 4,           /* enumeration budget exhausted */
  QN_ERR_DOMAIN = 5,           /* argument outside the operation's domain */
  QN_ERR_INEXACT_DIVISION = 6, /* polynomial quotient left a remainder */
  QN_ERR_ZERO_POLYNOMIAL = 7,  /* operation undefined on the zero polynomial */
  QN_ERR_DIVISION_BY_ZERO = 8,
  QN_ERR_DUPLICATE_NODE = 9,   /* repeated interpolation abscissa */
  QN_ERR_EMPTY_DESCENTS = 10,  /* word has no descent to remove */
  QN_ERR_EMPTY_SET = 11,       /* operation needs a nonempty set */
  QN_ERR_NOT_NATURAL = 12,     /* poset labeling is not natural */
  QN_ERR_BAD_SHAPE = 13,       /* invalid staircase parameters */
  QN_ERR_PARSE = 14,           /* malformed input text */
  QN_ERR_IO = 15,
  QN_ERR_INTERNAL = 16
} qn_status;

/* Message for the most recent failing call on this thread; never NULL. */
const char* qn_last_error(void);

void qn_string_free(char* s);

typedef struct qn_poset qn_poset;
typedef struct qn_poset_list qn_poset_list;
typedef struct qn_result qn_result;
typedef struct qn_report qn_report;

/* --- posets ------------------------------------------------------------ */

/* {"m": 4, "covers": [[1,2],[2,4],[3,4]]}; labels are 1..m and the
 * transitive closure is applied. */
qn_status qn_poset_parse_json(const char* text, qn_poset** out);

/* pairs is a flat array a1,b1,a2,b2,... of n_pairs relations (1-indexed). */
qn_status qn_poset_from_covers(int m, const int* pairs, int n_pairs, qn_poset** out);

qn_status qn_poset_to_json(const qn_poset* p, char** out);
int qn_poset_size(const qn_poset* p);
qn_status qn_poset_clone(const qn_poset* p, qn_poset** out);
void qn_poset_free(qn_poset* p);

/* All labeled posets on m elements, deterministic order; m <= 5. */
qn_status qn_poset_enumerate(int m, qn_poset_list** out);
int qn_poset_list_size(const qn_poset_list* l);
const qn_poset* qn_poset_list_get(const qn_poset_list* l, int i);
void qn_poset_list_free(qn_poset_list* l);

/* Random poset: closure of a DAG whose admissible edges appear with
 * probability prob_num/prob_den; deterministic for a fixed seed. */
qn_status qn_random_poset(int m, uint64_t prob_num, uint64_t prob_den,
                          uint64_t seed, qn_poset** out);

/* --- q-Ehrhart pipeline ------------------------------------------------- */

/* Computes F, N, phi, D and E for the order polytope of p. max_extensions
 * bounds the linear-extension enumeration (0 means the default budget). */
qn_status qn_ehrhart(const qn_poset* p, uint64_t max_extensions, qn_result** out);

qn_status qn_result_to_json(const qn_result* r, char** out);
void qn_result_free(qn_result* r);

/* Newton polygon exports for the F ('F') or N ('N') polynomial of a result:
 * TSV has one "q<TAB>x" vertex per line in canonical order; SVG renders the
 * polygon with its support points. */
qn_status qn_newton_tsv(const qn_result* r, char which, char** out);
qn_status qn_newton_svg(const qn_result* r, char which, char** out);

/* --- linear extensions -------------------------------------------------- */

/* Tab-separated listing of L(p); with_stats != 0 appends the per-k minima
 * of maj - k*des + C(k+1,2) with witnesses. */
qn_status qn_extensions_table(const qn_poset* p, int with_stats,
                              uint64_t max_extensions, char** out);

/* --- verification -------------------------------------------------------- */

/* Runs the full predicate battery (polygon shapes, slice profiles, oracle
 * round-trips, bounded-map identity, reciprocity). A report whose checks
 * fail is still QN_OK; non-OK means the run itself could not complete.
 * max_n bounds the brute-force dilation (0 means the default), and
 * max_extensions is as in qn_ehrhart. */
qn_status qn_verify(const qn_poset* p, int max_n, uint64_t max_extensions,
                    qn_report** out);

int qn_report_passed(const qn_report* r);
qn_status qn_report_to_json(const qn_report* r, char** out);
void qn_report_free(qn_report* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QNEWTON_H */
