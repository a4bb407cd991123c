/* vyb: virtual biquandle counting and Yang-Baxter 2-cocycle invariants of
 * virtual knots and links given as virtual signed Gauss codes.
 *
 * C interface to the shared library. All functions return a vyb_status;
 * on failure vyb_last_error() holds a message (thread-local, valid until the
 * next failing call on the same thread). Strings returned through char**
 * output parameters are heap-allocated; release them with vyb_string_free().
 *
 * Conventions:
 *  - codes: token grammar "U1+ O2+ R3 ..." (components separated by '/'), the
 *    Gaussian-integer list "[-1-I,-2-2*I,3,...,0]", or JSON
 *    {"components":[[{"kind":"U","id":1,"sign":1},...]]};
 *  - permutations: one-line notation JSON arrays such as "[2,3,1]";
 *    passing NULL where a permutation is expected means the identity;
 *  - 2-cochains: JSON arrays of length n^2 (entry n(i-1)+j is the coefficient
 *    on the pair (i,j)); non-integer entries as strings "p/q"; "zero" is
 *    accepted for the zero cochain.
 */
#ifndef VYB_H
#define VYB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  VYB_OK = 0,
  VYB_ERR_PARSE = 1,   /* malformed textual input */
  VYB_ERR_DOMAIN = 2,  /* violated precondition or mathematical constraint */
  VYB_ERR_ARG = 3      /* null pointer / bad enum value */
} vyb_status;

typedef struct vyb_code vyb_code;   /* a validated virtual signed Gauss code */
typedef struct vyb_table vyb_table; /* a biquandle operation table */

const char* vyb_version(void);
const char* vyb_last_error(void);
void vyb_string_free(char* s);

/* ---- Gauss codes ---- */
vyb_status vyb_code_parse(const char* text, vyb_code** out);
vyb_status vyb_code_from_json(const char* json_text, vyb_code** out);
vyb_status vyb_code_from_catalog(const char* name, vyb_code** out);
/* format: "tokens" | "gaussint" | "json" */
vyb_status vyb_code_serialize(const vyb_code* code, const char* format, char** out);
void vyb_code_free(vyb_code* code);

/* ---- biquandle tables ---- */
vyb_status vyb_table_trivial(int n, vyb_table** out);
vyb_status vyb_table_alexander(int n, int s, int t, vyb_table** out);
/* Accepts {"up":...,"upbar":...,"low":...,"lowbar":...} or a 2n x 2n block
 * matrix [[...]] with blocks (upbar | up) over (lowbar | low). */
vyb_status vyb_table_from_json(const char* json_text, vyb_table** out);
vyb_status vyb_table_to_json(const vyb_table* table, char** out);
vyb_status vyb_table_axiom_report(const vyb_table* table, char** json_out);
vyb_status vyb_table_automorphisms(const vyb_table* table, char** json_out);
vyb_status vyb_table_conjugacy_reps(const vyb_table* table, char** json_out);
void vyb_table_free(vyb_table* table);

/* ---- colorings and invariants ---- */
vyb_status vyb_colorings(const vyb_code* code, const vyb_table* table, const char* s_perm,
                         char** json_out);
vyb_status vyb_count(const vyb_code* code, const vyb_table* table, const char* s_perm,
                     unsigned long long* out);
/* format: "default" (two-variable when strongly compatible, else one-variable
 * in T), "multiset", "poly1", "poly2", "json". Incompatible pairs are
 * rejected with VYB_ERR_DOMAIN. */
vyb_status vyb_invariant(const vyb_code* code, const vyb_table* table, const char* s_perm,
                         const char* phi, const char* v, const char* format, char** out);
vyb_status vyb_nonclassical(const vyb_code* code, const vyb_table* table, char** json_out);

/* ---- cocycle spaces ---- */
vyb_status vyb_yb_cocycle_basis(const vyb_table* table, char** json_out);
vyb_status vyb_s_cocycle_basis(int n, const char* s_perm, char** json_out);
vyb_status vyb_degenerate_basis(int n, const char* s_perm, char** json_out);
/* "incompatible" | "compatible" | "strongly_compatible" */
vyb_status vyb_compatibility(const vyb_table* table, const char* s_perm, const char* phi,
                             const char* v, char** out);
vyb_status vyb_compatible_pairs(const vyb_table* table, const char* s_perm, char** json_out);

/* ---- moves ---- */
vyb_status vyb_shuffle(const vyb_code* code, unsigned long long seed, int n_moves,
                       vyb_code** out, char** records_json);

/* ---- batch jobs ---- */
/* One JSON job line in, one JSON result line out; cache_dir may be NULL. */
vyb_status vyb_run_job(const char* job_json, const char* cache_dir, char** result_json);

#ifdef __cplusplus
}
#endif

#endif /* VYB_H */
