#ifndef IGUSA_IGUSA_H
#define IGUSA_IGUSA_H

/* C interface to the exact Igusa local zeta engine.
 *
 * A session fixes the residue field F_q (q = p^k), a multiplicative
 * character of the unit group, and an enumeration budget for the
 * verification oracles.  Computations return opaque result handles that
 * stay valid after the session is freed.
 *
 * Every function that can fail returns an igusa_status; the message for
 * the most recent failure on the calling thread is available through
 * igusa_last_error().  Strings returned as char* are heap-allocated and
 * must be released with igusa_string_free().
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum igusa_status {
    IGUSA_OK = 0,
    IGUSA_EINVAL = 1,      /* malformed argument or configuration */
    IGUSA_EHYPOTHESIS = 2, /* input outside the family handled exactly */
    IGUSA_EPARSE = 3,      /* syntax error in an input expression */
    IGUSA_EBUDGET = 4,     /* enumeration would exceed the point budget */
    IGUSA_EINTERNAL = 5    /* broken invariant; always a bug */
} igusa_status;

typedef struct igusa_session igusa_session;
typedef struct igusa_result igusa_result;

/* Creates a session over F_q with q = p^k.  For k >= 2 a monic irreducible
 * modulus of degree k is required, given as its coefficient list (constant
 * term first, length k + 1); for k = 1 pass NULL.  Returns NULL on failure
 * with the reason in igusa_last_error().  The character starts out trivial
 * and the oracle budget at its default. */
igusa_session* igusa_session_new(long p, long k, const long* modulus, size_t modulus_len);
void igusa_session_free(igusa_session* s);

igusa_status igusa_session_set_character_trivial(igusa_session* s);

/* Order-N character of conductor 1: chi(u) = zeta_N^(e * ind(u)) on the
 * Teichmueller part, where ind is the discrete log with respect to the
 * session's fixed generator of F_q^x.  Requires N | q - 1. */
igusa_status igusa_session_set_character_mult(igusa_session* s, long N, long e);

/* Order-N character of conductor c given by an explicit table: keys[i] is
 * a unit residue mod pi^c encoded in base q with the least significant
 * digit first (digit d_j contributes d_j * q^j), and exps[i] the exponent
 * of zeta_N assigned to it.  The table must cover all units mod pi^c and
 * define a homomorphism of exact order N and exact conductor c. */
igusa_status igusa_session_set_character_table(igusa_session* s, long N, long c,
                                               const long* keys, const long* exps,
                                               size_t n);

/* Cap on residue pairs any verification oracle may enumerate. */
igusa_status igusa_session_set_budget(igusa_session* s, long long budget);

/* Computes Z(s, chi) for a polynomial expression in x, y and the
 * uniformizer t.  mode selects the solving route:
 *   "theorem11"  binomial with higher-order perturbation,
 *   "theorem12"  factored superelliptic curve expression y^m - c*(x-r1)^n1...,
 *   "auto"       curve shape when the expression matches one, else the
 *                binomial route; no silent fallback beyond that.
 * On IGUSA_OK, *out receives a new result handle. */
igusa_status igusa_compute_poly(igusa_session* s, const char* expr, const char* mode,
                                igusa_result** out);

/* Computes Z(s, chi) for a curve block
 *   "gamma0=<lit>; roots=[(<lit>,<int>),...]; m=<int>"
 * where <lit> is a Laurent literal in t.  m_hint > 0 supplies m when the
 * block omits it; when both are present they must agree. */
igusa_status igusa_compute_curve(igusa_session* s, const char* block, long m_hint,
                                 igusa_result** out);

void igusa_result_free(igusa_result* r);

/* Canonical JSON of the rational function; re-emitting a parsed copy is
 * byte-identical. */
char* igusa_result_json(const igusa_result* r);
char* igusa_result_latex(const igusa_result* r);

/* JSON array of the power-series coefficients of T^0..T^order. */
char* igusa_result_series_json(const igusa_result* r, long order);

/* JSON array of candidate pole real parts from the canonical denominator,
 * as rational strings in descending order. */
char* igusa_result_poles_json(const igusa_result* r);

/* Route that produced the result: "theorem11" or "theorem12". */
const char* igusa_result_route(const igusa_result* r);

/* Runs the independent verification oracles against the stored integrand
 * to the given depth and writes a JSON report to *report:
 *   - a reference series expansion to order `depth` (all characters),
 *   - for the trivial character, exact point counts mod pi^e for e <= depth
 *     tested against the generating-function identity,
 *   - for nontrivial characters with rational certificate arithmetic, a
 *     truncated-integral bound |Z(t0) - value| <= tail at the rational t0
 *     given as "num/den" (NULL means 1/2).
 * The report's "pass" field is the conjunction of the checks that ran. */
igusa_status igusa_result_oracle_json(const igusa_result* r, long depth,
                                      const char* t0, char** report);

void igusa_string_free(char* s);

/* Message for the calling thread's most recent failure; empty after a
 * success.  The pointer stays owned by the library. */
const char* igusa_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
