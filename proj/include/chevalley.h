/* chevalley: exact point counts for reductive groups over finite fields and
 * their classifying stacks.
 *
 * All functions return a status code; CHV_OK means success. String outputs
 * are heap-allocated, owned by the caller, and released with
 * chv_string_free. On failure outputs are untouched and a thread-local
 * message is available via chv_last_error. Handles are opaque and freed
 * with their matching free function. The library never prints and never
 * uses floating point for mathematical values.
 *
 * Group labels: A<n>, B<n>, C<n>, D<n>, E6, E7, E8, F4, G2, T<n> with an
 * optional leading twist digit: 2A<n> (n >= 2), 2D<n>, 2E6, 3D4.
 * Field sizes q = p^s need p prime and q < 2^32; a leading twist digit 2
 * requires s even, 3 requires s divisible by 3.
 */
#ifndef CHEVALLEY_H
#define CHEVALLEY_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CHV_API __declspec(dllexport)
#else
#define CHV_API __attribute__((visibility("default")))
#endif

typedef enum chv_status {
  CHV_OK = 0,
  CHV_ERR_PARSE = 1,            /* malformed group label */
  CHV_ERR_INVALID_SPEC = 2,     /* inadmissible family/rank/twist */
  CHV_ERR_NOT_PRIME_POWER = 3,  /* q is not p^s */
  CHV_ERR_TWIST_FIELD = 4,      /* field exponent incompatible with twist */
  CHV_ERR_NOT_RATIONAL = 5,     /* internal: omega part survived */
  CHV_ERR_NON_INTEGRAL = 6,     /* internal: order not a positive integer */
  CHV_ERR_BUDGET = 7,           /* enumeration budget exceeded */
  CHV_ERR_EVEN_CHAR = 8,        /* orthogonal oracle over even characteristic */
  CHV_ERR_BAD_ARG = 9,          /* argument outside the supported domain */
  CHV_ERR_VERIFY = 10,          /* a verification suite reported failures */
  CHV_ERR_INTERNAL = 11         /* redundant cross-check failed */
} chv_status;

/* Stable name for a status code ("ok", "parse", ...). */
CHV_API const char* chv_status_name(chv_status st);

/* Message for the most recent failure on this thread; never NULL. */
CHV_API const char* chv_last_error(void);

CHV_API void chv_string_free(char* s);

/* ---- catalog ---- */

typedef struct chv_group chv_group;

/* Parses a label like "G2", "2A4", "T3" and resolves its catalog data. */
CHV_API chv_status chv_group_parse(const char* label, chv_group** out);
CHV_API void chv_group_free(chv_group* g);

/* Canonical label (parse o render is the identity). */
CHV_API chv_status chv_group_render(const chv_group* g, char** out);

/* Catalog record: {"spec", "family", "rank", "twist", "dim", "degrees",
 * "eigenvalues": [{"numerator", "order"}, ...]}. */
CHV_API chv_status chv_group_info_json(const chv_group* g, char** out);

/* Whole catalog up to max_rank: rank bounds per family plus all entries. */
CHV_API chv_status chv_catalog_json(int max_rank, char** out);

/* Checks q = p^s is a prime power compatible with the group's twist. */
CHV_API chv_status chv_group_check_field(const chv_group* g, int64_t q);

/* ---- point counts ---- */

/* Decimal order of the group over the field with q^ext elements. */
CHV_API chv_status chv_group_order(const chv_group* g, int64_t q, int ext, char** out);

/* {"group", "q", "i", "order", "bg_count": {"num", "den"}}. */
CHV_API chv_status chv_count_json(const chv_group* g, int64_t q, int ext, char** out);

/* Truncated geometric multi-sum with every index capped at cutoff:
 * {"group", "q", "i", "cutoff", "partial": {num, den}, "tail_bound": {...},
 *  "closed_form": {...}, "within_tail_bound", "nested_checked"}. */
CHV_API chv_status chv_count_series_json(const chv_group* g, int64_t q, int ext,
                                         int64_t cutoff, char** out);

/* Even-degree Betti numbers as a JSON list [b_0, b_2, ..., b_{2*max_half}].
 * Entries above 2^53 - 1 are emitted as decimal strings. */
CHV_API chv_status chv_betti_json(const chv_group* g, int max_half, char** out);

/* ---- zeta series ---- */

/* Exp-form coefficients: {"group", "q", "M", "mode": "exp",
 * "coefficients": [{num, den}, ...]}. */
CHV_API chv_status chv_zeta_json(const chv_group* g, int64_t q, int order, char** out);

/* Truncated Euler product next to the exp form: mode "euler", adds "W",
 * "factor_count", "discrepancies" and "tail_majorants". */
CHV_API chv_status chv_zeta_euler_json(const chv_group* g, int64_t q, int order,
                                       int64_t weight_cutoff, char** out);

/* ---- brute-force oracle ---- */

/* family is "sl" (n in {2,3}), "sp" (n in {2,4}) or "so" (n = 3, odd q).
 * Emits {"family", "n", "q", "order"}. threads >= 1 partitions the
 * enumeration; the count is partition-independent. budget <= 0 selects the
 * default work bound of 10^8 matrix candidates. */
CHV_API chv_status chv_oracle_json(const char* family, int n, int64_t q, int threads,
                                   int64_t budget, char** out);

/* ---- verification sweeps ---- */

/* suites: comma-separated subset of integrality,reciprocity,oracle,series,
 * zeta, or "all". Emits one record per suite: {"suite", "cases",
 * "failures", "notes": [...]}; returns CHV_ERR_VERIFY when any suite
 * reports failures. */
CHV_API chv_status chv_verify_json(const char* suites, int max_rank, int64_t max_q,
                                   char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CHEVALLEY_H */
