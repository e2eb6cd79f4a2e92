/* C interface to the bisymmetric Macdonald library.
 *
 * All functions return a bmac_status; fetch the message for the last failure
 * with bmac_last_error(). Output strings are heap-allocated and must be
 * released with bmac_free_string().
 */
#ifndef BMAC_H
#define BMAC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bmac_session bmac_session;

typedef enum {
    BMAC_OK = 0,
    BMAC_EPARSE = 1,   /* bad label, expression, or option value */
    BMAC_EDOMAIN = 2,  /* precondition violated (degree mismatch, pole, ...) */
    BMAC_ECHECK = 3,   /* a verification suite reported counterexamples */
    BMAC_EINTERNAL = 4
} bmac_status;

bmac_session* bmac_session_new(void);
void bmac_session_free(bmac_session* s);
const char* bmac_last_error(const bmac_session* s);
void bmac_free_string(char* p);
const char* bmac_version(void);

/* Expansion of a family member.
 * label:  pair "lam|mu" (e.g. "|2", "3,1|2") or superpartition "a;s"
 *         (e.g. "1,0;2").
 * family: P, Q, J, H, Htilde (pair labels); P, J, H, schur (superpartitions).
 * basis:  PP, SM, SP, SS, PM.
 * format: json, text, latex, csv.
 */
bmac_status bmac_expand(bmac_session* s, const char* label, const char* family,
                        const char* basis, const char* format, char** out);

/* Kostka table; variant "double" (m ignored) or "super" (fermionic degree m
 * with star degree n). */
bmac_status bmac_kostka(bmac_session* s, int n, int m, const char* variant,
                        const char* format, char** out);

/* Nabla pairings for degree n: the closed forms and their q=t=1 values, plus
 * the full Schur expansion of nabla^B s_{0,(n)}. which: B, barB, sqrtB. */
bmac_status bmac_nabla(bmac_session* s, int n, const char* which, const char* format,
                       char** out);

/* Evaluation of P at x_i = t^{i-1}/q^{m-i}, y_i = t^{m+i-1}: closed form and
 * explicit substitution. Accepts a pair or a superpartition label. */
bmac_status bmac_evaluate(bmac_session* s, const char* label, int bigN, int m, char** out);

/* Verification suites; name "all" runs every suite. Returns BMAC_ECHECK if
 * any check fails; the JSON report is produced either way. */
bmac_status bmac_verify(bmac_session* s, const char* suite, int max_n, int m, int bigN,
                        unsigned long seed, char** report);

/* Stability sweep for a pair label across fermionic degrees ms[0..count-1]. */
bmac_status bmac_sweep(bmac_session* s, const char* pair, const int* ms, size_t count,
                       char** out);

#ifdef __cplusplus
}
#endif

#endif
