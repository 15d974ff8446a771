/* nefcalc — exact intersection-number sequences of rational polytopes and
 * certified verification of the associated inequalities.
 *
 * C API conventions:
 *   - Objects are opaque handles created by the library and released with
 *     the matching *_free function.
 *   - Every function returns NEF_OK (0) on success or a nonzero status;
 *     nef_last_error() describes the most recent failure on the calling
 *     thread.
 *   - Strings returned through char** are NUL-terminated UTF-8 owned by
 *     the caller; release them with nef_string_free. All structured data
 *     crosses the boundary as JSON text.
 */
#ifndef NEFCALC_H
#define NEFCALC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nef_polytope nef_polytope;
typedef struct nef_sequence nef_sequence;

enum nef_status {
  NEF_OK = 0,
  NEF_ERR_INVALID_INPUT = 2,
  NEF_ERR_PARSE = 3,
  NEF_ERR_DEGENERATE_INPUT = 4,
  NEF_ERR_NOT_BIG = 5,
  NEF_ERR_UNREALIZABLE_SEQUENCE = 6,
  NEF_ERR_DOMAIN = 7,
  NEF_ERR_INTERNAL = 8,
  NEF_ERR_NULL_ARGUMENT = 9
};

/* Thread-local message for the last failing call; never NULL. */
const char* nef_last_error(void);

void nef_string_free(char* s);

/* ---- objects ---------------------------------------------------------- */

/* Polytope wire format:
 *   {"dim": 2, "vertices": [["0/1","0/1"], ["1/1","0/1"], ...]}
 * Coordinates are exact "p/q" (or integer) strings; floats are rejected.
 * The stored polytope is the convex hull of the listed points. */
int nef_polytope_parse(const char* json_text, nef_polytope** out);
int nef_polytope_to_json(const nef_polytope* p, char** out);
void nef_polytope_free(nef_polytope* p);

/* Sequence wire format: {"d": 2, "s": ["8/1","4/1","2/1"], "realized": true}.
 * "realized" defaults to false: a free sequence carries no guarantee of
 * coming from an actual pair of bodies. */
int nef_sequence_parse(const char* json_text, nef_sequence** out);
int nef_sequence_to_json(const nef_sequence* s, char** out);
void nef_sequence_free(nef_sequence* s);

/* ---- computations ----------------------------------------------------- */

/* Exact mixed volume of exactly dim bodies; report includes the full
 * intersection sequence (with per-algorithm provenance) for pairs. */
int nef_mixed_volume(const nef_polytope* const* bodies, int count,
                     char** report_json);

/* s_i = d! V(P^[i], Q^[d-i]), marked realized. */
int nef_intersection_sequence(const nef_polytope* p, const nef_polytope* q,
                              nef_sequence** out);

/* Consolidated inequality report for a sequence or a pair. The report's
 * "verdict" field is "pass", "violation" or "undecided"; the call itself
 * succeeds in all three cases. max_bits = 0 selects the default
 * precision cap. */
int nef_verify_sequence(const nef_sequence* s, unsigned max_bits,
                        char** report_json);
int nef_verify_pair(const nef_polytope* p, const nef_polytope* q,
                    unsigned max_bits, char** report_json);

/* Radius bounds, Diskant and (d = 2, pair form) Bonnesen. slope is an
 * optional exact "p/q" override, NULL to derive it from the pair (or skip
 * Diskant when no pair is given). Pair pointers may be NULL. */
int nef_bounds_sequence(const nef_sequence* s, const char* slope,
                        unsigned max_bits, char** report_json);
int nef_bounds_pair(const nef_polytope* p, const nef_polytope* q,
                    const char* slope, unsigned max_bits, char** report_json);

/* Exact containment LP: {"t": "p/q", "x": [...], "R": "p/q", ...} with the
 * lexicographically least witness translation and the dual certificate. */
int nef_radii(const nef_polytope* p, const nef_polytope* q,
              char** report_json);

/* Verifies that the t^1 coefficient of vol(P + tQ) equals
 * d * V(P^[d-1], Q) exactly. */
int nef_derivative_check(const nef_polytope* p, const nef_polytope* q,
                         char** report_json);

/* Deterministic full-dimensional random polytope: the same
 * (seed, dim, max_vertices, index) yields the same body on every
 * platform. dim in [1,4]. */
int nef_generate(uint64_t seed, int dim, int max_vertices, int index,
                 nef_polytope** out);

#ifdef __cplusplus
}
#endif

#endif /* NEFCALC_H */
