/*
 * lievec - exact-arithmetic analysis of finite-dimensional Lie algebras of
 * vector fields with exponential-trigonometric-polynomial coefficients.
 *
 * C interface over the C++ core. All objects are opaque handles; all
 * returned strings are heap-allocated and must be released with
 * lievec_string_free. Functions return LIEVEC_OK on success and write a
 * diagnostic message to *out_error otherwise (also heap-allocated).
 */
#ifndef LIEVEC_H
#define LIEVEC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lievec_status {
  LIEVEC_OK = 0,
  LIEVEC_ERROR_USAGE = 1,        /* bad arguments to an API call */
  LIEVEC_ERROR_PARSE = 2,        /* input text does not parse */
  LIEVEC_ERROR_PRECONDITION = 3, /* NotSolvable, NotTransitive, ... */
  LIEVEC_ERROR_INTERNAL = 4     /* internal certificate failure */
} lievec_status;

/* A parsed, bracket-closed Lie algebra of vector fields. */
typedef struct lievec_algebra lievec_algebra;

const char *lievec_version(void);
const char *lievec_status_name(lievec_status status);
void lievec_string_free(char *s);

/*
 * Algebra file format (one declaration per line, '#' starts a comment):
 *   vars x, y, u
 *   weights 0, 1, 2          (optional)
 *   gen y^2*d_x - u*d_u
 * Field grammar: terms are '*'-separated factors followed by d_<var>;
 * factors are rationals (p or p/q), variables, powers (y^2), and
 * exp/sin/cos of rational linear forms in the variables.
 */

/* Parses the file and closes the generator span under brackets.
 * max_dim caps the closure (0 means the default of 64). */
lievec_status lievec_algebra_open(const char *file_text, int max_dim,
                                  lievec_algebra **out_algebra,
                                  char **out_error);
void lievec_algebra_close(lievec_algebra *algebra);

/* Canonical echo of the generators, one field per line. No closure. */
lievec_status lievec_parse(const char *file_text, char **out_text,
                           char **out_error);

/* Dimension, solvability, nilpotency, transitivity, lower central data. */
lievec_status lievec_analyze(const lievec_algebra *algebra, char **out_json,
                             char **out_error);

/* kind: "derived" | "lcs" | "nilradical" */
lievec_status lievec_series(const lievec_algebra *algebra, const char *kind,
                            char **out_json, char **out_error);

/* Basis of the nilradical in canonical text, one field per line. */
lievec_status lievec_nilradical(const lievec_algebra *algebra,
                                char **out_text, char **out_error);

/* Degree membership report of the file's generators under the weights.
 * weights_csv: "w1,...,wn" (non-negative integers);
 * mode: "nonpos" | "strictneg". */
lievec_status lievec_grade(const char *file_text, const char *weights_csv,
                           const char *mode, char **out_json,
                           char **out_error);

/* Monomial generators of the graded component of the given negative
 * degree. vars_csv: "x,y,..."; weights_csv as above. */
lievec_status lievec_enumerate(const char *vars_csv, const char *weights_csv,
                               long degree, char **out_json,
                               char **out_error);

/* Runs the normalization pipeline and emits the certificate JSON.
 * jet_order 0 picks the default 2*(w(h)+1);
 * path: "auto" | "nilpotent" | "solvable";
 * strategy: "forms" | "flows".
 * *out_certified is 1 exactly when the certificate status is certified. */
lievec_status lievec_normalize(const lievec_algebra *algebra,
                               unsigned jet_order, const char *path,
                               const char *strategy, int *out_certified,
                               char **out_json, char **out_error);

/* Normalizes first when needed, then runs the Lie-conjecture witness.
 * *out_witnessed is 1 when the verdict is witnessed (possibly with
 * unresolved factors). */
lievec_status lievec_witness(const lievec_algebra *algebra,
                             unsigned jet_order, int *out_witnessed,
                             char **out_json, char **out_error);

/* Emits a random solvable algebra file built from the dilation data.
 * density: "p/q" inclusion probability (default "1/2" when NULL). */
lievec_status lievec_generate(const char *vars_csv, const char *weights_csv,
                              uint64_t seed, const char *density, int max_dim,
                              char **out_file_text, char **out_error);

#ifdef __cplusplus
}
#endif

#endif /* LIEVEC_H */
