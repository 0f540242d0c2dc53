#ifndef NHOMEGA_H
#define NHOMEGA_H

/* C interface to the graded n-ary Hom-algebra workbench.
 *
 * All commands produce a JSON report (malloc'd, UTF-8, caller frees with
 * nh_free_string). Status codes mirror the CLI exit codes:
 *   NH_OK          every check in the report passed
 *   NH_CHECK_FAIL  the command ran, but a check failed (report has details)
 *   NH_BAD_INPUT   malformed file / arguments; *err carries a message
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nh_algebra nh_algebra;

typedef enum {
    NH_OK = 0,
    NH_CHECK_FAIL = 1,
    NH_BAD_INPUT = 2,
} nh_status;

const char* nh_version(void);

void nh_free_string(char* s);
void nh_algebra_free(nh_algebra* a);

/* Parse an algebra file. On success *out is set; on failure *err (if
 * non-NULL) receives a message. */
nh_status nh_algebra_load_file(const char* path, nh_algebra** out, char** err);
nh_status nh_algebra_load_json(const char* text, nh_algebra** out, char** err);

/* Canonical serialization of the loaded algebra. */
char* nh_algebra_to_json(const nh_algebra* a);

/* Grading and bicharacter validity plus structure checks. */
nh_status nh_validate(const nh_algebra* a, char** report, char** err);

/* space: one of "zder","der","qder","gder","c","qc". degree: residue
 * tuple of length degree_len, or NULL for all degrees. */
nh_status nh_solve(const nh_algebra* a, const char* space, int k, const int* degree,
                   int degree_len, int commute_alpha, char** report, char** err);

/* identity_is_text = 0: built-in name (e.g. "hom_jacobi(2)");
 * identity_is_text = 1: identity source text. */
nh_status nh_check(const nh_algebra* a, const char* identity, int identity_is_text,
                   char** report, char** err);

nh_status nh_annihilator(const nh_algebra* a, char** report, char** err);
nh_status nh_derived(const nh_algebra* a, char** report, char** err);

/* Builds the doubled algebra and writes it to out_path. */
nh_status nh_extend(const nh_algebra* a, const char* out_path, char** report, char** err);

/* lemmas: comma-separated ids, or "all". */
nh_status nh_verify(const nh_algebra* a, const char* lemmas, int kmax, char** report,
                    char** err);

/* Full atlas: all spaces up to kmax, inclusion chain, lemmas, embedding. */
nh_status nh_report(const nh_algebra* a, int kmax, char** report, char** err);

#ifdef __cplusplus
}
#endif

#endif /* NHOMEGA_H */
