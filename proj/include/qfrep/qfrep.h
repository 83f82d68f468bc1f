/* C interface to the qfrep library.
 *
 * All structured data crosses the boundary as UTF-8 JSON text; rationals are "num/den"
 * strings. Strings returned through `char** out` parameters are owned by the caller and
 * must be released with qfr_string_free. On any status other than QFR_OK the out
 * parameters are left untouched and qfr_last_error() describes the failure. */
#ifndef QFREP_H
#define QFREP_H

#include <stdint.h>

#if defined(_WIN32)
#define QFR_API __declspec(dllexport)
#else
#define QFR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qfr_status {
    QFR_OK = 0,
    QFR_INVALID_ARGUMENT = 1, /* malformed or out-of-range input */
    QFR_DOMAIN = 2,           /* degenerate input: singular curve, pole, torsion generator, ... */
    QFR_VERIFICATION = 3,     /* an exact check failed or a search was undecided */
    QFR_PARSE = 4,            /* malformed JSON or rational literal */
    QFR_INTERNAL = 5
} qfr_status;

typedef struct qfr_construction qfr_construction;

QFR_API const char* qfr_version(void);
/* Message for the most recent failure on the calling thread ("" if none). */
QFR_API const char* qfr_last_error(void);
QFR_API void qfr_string_free(char* s);

/* JSON array of {"family", "parameters"} for every construction family. */
QFR_API qfr_status qfr_families(char** json_out);

/* Builds a construction; params_json is an object of rational strings keyed by parameter name. */
QFR_API qfr_status qfr_construction_create(const char* family, const char* params_json, qfr_construction** out);
QFR_API void qfr_construction_destroy(qfr_construction* con);
/* Surface, substitution, auxiliary curves and scaling data as a JSON object. */
QFR_API qfr_status qfr_construction_describe(const qfr_construction* con, char** json_out);
/* JSON array of the surface points over (U, w) on the reduced auxiliary curve. */
QFR_API qfr_status qfr_construction_psi(const qfr_construction* con, const char* U, const char* w, char** json_out);

/* Streams `count` points with distinct projections. generator_json is
 * {"base": P, "point": P} with P = {"U": r, "w": r} | "inf+" | "inf-" on the reduced
 * auxiliary curve; key_form_value != 0 makes the form value the distinctness key.
 * Output: newline-delimited JSON, one surface point per line. */
QFR_API qfr_status qfr_generate_points(const qfr_construction* con, const char* generator_json, int count,
                                       int key_form_value, char** ndjson_out);

/* Random-specialization trials of the identity catalogue (only == NULL or "" runs all).
 * *all_ok is set to 1 when every identity held. */
QFR_API qfr_status qfr_verify_identities(const char* only, int trials, uint64_t seed, char** json_out, int* all_ok);

/* Solvability of w^2 = g(U) over Q_p (place = decimal prime) or R (place = "real").
 * coeffs_json is an ascending JSON array of rationals; depth <= 0 uses the default cap. */
QFR_API qfr_status qfr_local_solvable(const char* coeffs_json, const char* place, long depth, char** json_out);

/* Integer points of v^2 = u(u+2)(u+6) with |u| <= range. */
QFR_API qfr_status qfr_search_integer_points(long range, char** json_out);

/* Multiples of (1/2, 15/4) on Y^2 = (X^2+1)(X^2+11). */
QFR_API qfr_status qfr_cz_demo(int count, char** json_out);

/* JSON array of fixture ids. */
QFR_API qfr_status qfr_fixture_ids(char** json_out);
/* Runs a fixture. count <= 0 and range <= 0 select the fixture defaults. json_out gets the
 * structured result, text_out (optional, may be NULL) the human-readable report, and
 * *ok whether every check held. */
QFR_API qfr_status qfr_reproduce(const char* id, int count, long range, char** json_out, char** text_out, int* ok);

#ifdef __cplusplus
}
#endif

#endif
